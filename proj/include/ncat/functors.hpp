#pragma once

// The index functors G: X -> W and F: X -> V, sending every label to its
// Morse index (additive over pairings, zero on diagonal points), and the
// executable check of the functor laws.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ncat/cat_v.hpp"
#include "ncat/cat_w.hpp"
#include "ncat/kernels.hpp"
#include "ncat/morse.hpp"
#include "ncat/report.hpp"

namespace ncat {

class IndEnv {
public:
    IndEnv() = default;
    static IndEnv from(const FlowData& fd);

    void set(std::string id, std::uint32_t index) { index_[std::move(id)] = index; }
    std::optional<std::uint32_t> find(std::string_view id) const;

private:
    std::map<std::string, std::uint32_t, std::less<>> index_;
};

// Throws Error(unknown_atom).
std::uint32_t ind(const Label& x, const IndEnv& env);

// Throws Error(flow_data_inconsistent) when the image violates the W
// constraints, i.e. the flow data breaks an index condition.
WCell functor_g(const XCell& a, const IndEnv& env);
VCell functor_f(const XCell& a, const IndEnv& env);

struct FunctorCheckOptions {
    Execution exec = Execution::parallel;
    bool closure = true;  // include composites in the cells under test
};

// Commutation of G and F with s, t, 1 and every o_p over all cells and
// composable pairs up to max_level; the index bound on non-degenerate cells;
// and that normalizing a composite never changes its index profile.
Report check_functor_laws(const MorseCategory& x, const IndEnv& env, std::size_t max_level,
                          const FunctorCheckOptions& opt = {});

}  // namespace ncat
