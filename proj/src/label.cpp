#include "ncat/label.hpp"

#include <algorithm>

#include "ncat/error.hpp"

namespace ncat {

Label Label::atom(std::string id) {
    Label l;
    l.kind_ = Kind::atom;
    l.id_ = std::move(id);
    return l;
}

Label Label::point(Label of) {
    Label l;
    l.kind_ = Kind::point;
    l.parts_.push_back(std::move(of));
    return l;
}

Label Label::pairing(std::vector<Label> parts) {
    if (parts.size() < 2)
        throw Error(ErrorCode::invalid_arguments, "pairing needs at least two parts");
    Label l;
    l.kind_ = Kind::pairing;
    l.parts_ = std::move(parts);
    return l;
}

std::string Label::render() const {
    switch (kind_) {
        case Kind::atom: return id_;
        case Kind::point: return "pt(" + inner().render() + ")";
        case Kind::pairing: {
            std::string out = "(";
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) out += ", ";
                out += parts_[i].render();
            }
            return out + ")";
        }
    }
    return {};
}

bool operator==(const Label& a, const Label& b) {
    return a.kind_ == b.kind_ && a.id_ == b.id_ && a.parts_ == b.parts_;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.id_.compare(b.id_); c != 0) return c <=> 0;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
}

namespace {

Label from_parts(std::vector<Label> parts) {
    if (parts.size() == 1) return std::move(parts.front());
    std::sort(parts.begin(), parts.end());
    return Label::pairing(std::move(parts));
}

}  // namespace

Label normalize(const Label& x) {
    switch (x.kind()) {
        case Label::Kind::atom: return x;
        case Label::Kind::point: return Label::point(normalize(x.inner()));
        case Label::Kind::pairing: break;
    }
    std::vector<Label> flat;
    for (const Label& part : x.parts()) {
        Label n = normalize(part);
        if (n.is_pairing()) {
            flat.insert(flat.end(), n.parts().begin(), n.parts().end());
        } else {
            flat.push_back(std::move(n));
        }
    }
    const bool all_points =
        std::all_of(flat.begin(), flat.end(), [](const Label& l) { return l.is_point(); });
    if (all_points) {
        std::vector<Label> contents;
        contents.reserve(flat.size());
        for (const Label& pt : flat) contents.push_back(pt.inner());
        return Label::point(normalize(from_parts(std::move(contents))));
    }
    std::erase_if(flat, [](const Label& l) { return l.is_point(); });
    return from_parts(std::move(flat));
}

Label normalize_over_singleton(const Label& x) {
    Label n = normalize(x);
    if (n.is_pairing() &&
        std::all_of(n.parts().begin(), n.parts().end(),
                    [&](const Label& l) { return l == n.parts().front(); }))
        return n.parts().front();
    return n;
}

std::size_t label_size(const Label& x) {
    std::size_t n = 1;
    for (const Label& p : x.parts()) n += label_size(p);
    return n;
}

}  // namespace ncat
