#pragma once

#include <algorithm>
#include <array>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgf {

// Edge exponents (a1,...,al) of a modular graph function.
class GraphIndex {
public:
    GraphIndex(std::initializer_list<int> a) : GraphIndex(std::vector<int>(a)) {}
    explicit GraphIndex(std::vector<int> a) : a_(std::move(a)) {
        if (a_.size() < 2) throw std::domain_error("GraphIndex: need at least two exponents");
        for (int x : a_)
            if (x < 1) throw std::domain_error("GraphIndex: exponents must be >= 1");
        w_ = std::accumulate(a_.begin(), a_.end(), 0);
    }

    const std::vector<int>& exponents() const { return a_; }
    int operator[](std::size_t i) const { return a_[i]; }
    std::size_t loops() const { return a_.size(); }
    int weight() const { return w_; }

    std::string str() const {
        std::string s = "C_{";
        for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
        return s + "}";
    }

    friend bool operator==(const GraphIndex&, const GraphIndex&) = default;

private:
    std::vector<int> a_;
    int w_ = 0;
};

// Two-loop index (a1,a2,a3) as used by the Laurent and decomposition routines.
struct Triple {
    int a1, a2, a3;

    static Triple from(const GraphIndex& g) {
        if (g.loops() != 3) throw std::domain_error("expected a three-edge index");
        return {g[0], g[1], g[2]};
    }
    int weight() const { return a1 + a2 + a3; }
    GraphIndex index() const { return GraphIndex{a1, a2, a3}; }

    // All 6 orderings, including repeats for equal exponents.
    std::array<Triple, 6> permutations() const {
        return {{{a1, a2, a3}, {a1, a3, a2}, {a2, a1, a3}, {a2, a3, a1}, {a3, a1, a2}, {a3, a2, a1}}};
    }

    friend bool operator==(const Triple&, const Triple&) = default;
};

inline void require_laurent_triple(const Triple& t) {
    if (t.a1 < 1 || t.a2 < 1 || t.a3 < 1) throw std::domain_error("exponents must be >= 1");
    if (t.weight() < 3) throw std::domain_error("weight must be >= 3");
}

}  // namespace mgf
