#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cremona/domain.hpp"

namespace cremona {

// A polynomial ring descriptor: ordered variable names over a coefficient
// domain. Shared immutably by all values built over it.
struct Ring {
    std::vector<std::string> vars;
    Domain dom;

    std::size_t nvars() const { return vars.size(); }

    std::optional<std::size_t> var_index(const std::string& name) const {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) return std::nullopt;
        return static_cast<std::size_t>(it - vars.begin());
    }

    bool operator==(const Ring& o) const { return vars == o.vars && dom == o.dom; }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, Domain dom = Domain::rational()) {
    if (vars.empty()) throw DomainError("ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw DomainError("duplicate variable name " + vars[i]);
    return std::make_shared<Ring>(Ring{std::move(vars), dom});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

// x0..x<n> style ring
inline RingPtr make_ring_x(std::size_t n_plus_1, Domain dom = Domain::rational()) {
    std::vector<std::string> vs;
    vs.reserve(n_plus_1);
    for (std::size_t i = 0; i < n_plus_1; ++i) vs.push_back("x" + std::to_string(i));
    return make_ring(std::move(vs), dom);
}

inline RingPtr extend_ring(const RingPtr& r, const std::string& newvar) {
    auto vs = r->vars;
    vs.push_back(newvar);
    return make_ring(std::move(vs), r->dom);
}

inline RingPtr with_domain(const RingPtr& r, Domain dom) {
    return make_ring(r->vars, dom);
}

} // namespace cremona
