// Brute-force counting of surface-group representations into SL2(F_p):
// independent numeric ground truth for the engine polynomials at q = p.
// Desk scale only (p in {3, 5, 7}); everything is exhaustive enumeration
// plus group-algebra convolution.

#pragma once

#include "engine.hpp"

#include <cstdint>
#include <vector>

namespace sl2tqft {

struct BadCharacteristic : std::runtime_error {
    explicit BadCharacteristic(const std::string& what) : std::runtime_error(what) {}
};

// Values of a function on the group, indexed by element number. Entries are
// unbounded integers: convolution powers reach |G|^{2g}.
using ClassFunction = std::vector<Int>;

class FiniteGroup {
public:
    struct Elem {
        uint8_t a, b, c, d;  // row-major 2x2 entries over F_p
    };

    // Full enumeration of SL2(F_p). p = 2 collapses Id and -Id, degenerating
    // the stratification, and is rejected.
    static FiniteGroup build(int p) {
        if (p == 2) throw BadCharacteristic("p = 2: Id = -Id collapses the class structure");
        if (p != 3 && p != 5 && p != 7)
            throw BadCharacteristic("supported primes: 3, 5, 7 (got " + std::to_string(p) + ")");
        FiniteGroup g;
        g.p_ = p;
        g.pack_.assign(size_t(p * p * p * p), -1);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                for (int c = 0; c < p; ++c)
                    for (int d = 0; d < p; ++d)
                        if (((a * d - b * c) % p + p) % p == 1) {
                            g.pack_[size_t(((a * p + b) * p + c) * p + d)] = int(g.els_.size());
                            g.els_.push_back({uint8_t(a), uint8_t(b), uint8_t(c), uint8_t(d)});
                        }
        g.inv_.resize(g.els_.size());
        for (size_t i = 0; i < g.els_.size(); ++i) {
            const Elem& e = g.els_[i];
            g.inv_[i] = g.index({e.d, uint8_t((p - e.b) % p), uint8_t((p - e.c) % p), e.a});
        }
        return g;
    }

    int p() const { return p_; }
    int order() const { return int(els_.size()); }
    const Elem& element(int i) const { return els_[size_t(i)]; }

    int index(const Elem& e) const {
        const int i = pack_[size_t(((e.a * p_ + e.b) * p_ + e.c) * p_ + e.d)];
        if (i < 0) throw std::logic_error("FiniteGroup::index: not an SL2 element");
        return i;
    }

    int mul(int x, int y) const {
        const Elem& u = els_[size_t(x)];
        const Elem& v = els_[size_t(y)];
        const int p = p_;
        return index({uint8_t((u.a * v.a + u.b * v.c) % p), uint8_t((u.a * v.b + u.b * v.d) % p),
                      uint8_t((u.c * v.a + u.d * v.c) % p), uint8_t((u.c * v.b + u.d * v.d) % p)});
    }
    int inv(int x) const { return inv_[size_t(x)]; }
    int identity() const { return index({1, 0, 0, 1}); }
    int neg_identity() const {
        return index({uint8_t(p_ - 1), 0, 0, uint8_t(p_ - 1)});
    }
    int trace(int x) const {
        const Elem& e = els_[size_t(x)];
        return (e.a + e.d) % p_;
    }
    int conjugate(int x, int by) const { return mul(mul(by, x), inv(by)); }

private:
    int p_ = 0;
    std::vector<Elem> els_;
    std::vector<int> pack_;
    std::vector<int> inv_;
};

inline FiniteGroup build_group(int p) { return FiniteGroup::build(p); }

// N(z) = #{(A, B) : [A, B] = z}; computed in O(|G|^2) products.
inline ClassFunction commutator_distribution(const FiniteGroup& g) {
    const int n = g.order();
    ClassFunction out(size_t(n), Int(0));
    for (int a = 0; a < n; ++a) {
        const int ai = g.inv(a);
        for (int b = 0; b < n; ++b) {
            const int z = g.mul(g.mul(a, b), g.mul(ai, g.inv(b)));
            ++out[size_t(z)];
        }
    }
    return out;
}

// (f * h)(z) = sum over xy = z of f(x) h(y).
inline ClassFunction convolve(const FiniteGroup& g, const ClassFunction& f, const ClassFunction& h) {
    const int n = g.order();
    if (int(f.size()) != n || int(h.size()) != n)
        throw std::invalid_argument("convolve: size mismatch");
    ClassFunction out(size_t(n), Int(0));
    for (int x = 0; x < n; ++x) {
        if (f[size_t(x)] == 0) continue;
        for (int y = 0; y < n; ++y) {
            if (h[size_t(y)] == 0) continue;
            out[size_t(g.mul(x, y))] += f[size_t(x)] * h[size_t(y)];
        }
    }
    return out;
}

inline ClassFunction delta(const FiniteGroup& g, int at) {
    ClassFunction out(size_t(g.order()), Int(0));
    out[size_t(at)] = 1;
    return out;
}

// F_p-points of the complex conjugacy classes, cut out by trace conditions:
// [J_+] is the trace-2 locus minus Id, [J_-] the trace-(-2) locus minus -Id.
inline ClassFunction class_indicator(const FiniteGroup& g, PunctureClass c) {
    const int n = g.order();
    ClassFunction out(size_t(n), Int(0));
    switch (c) {
        case PunctureClass::Id:
            out[size_t(g.identity())] = 1;
            break;
        case PunctureClass::NegId:
            out[size_t(g.neg_identity())] = 1;
            break;
        case PunctureClass::JPlus: {
            const int tr = 2 % g.p();
            for (int i = 0; i < n; ++i)
                if (g.trace(i) == tr && i != g.identity()) out[size_t(i)] = 1;
            break;
        }
        case PunctureClass::JMinus: {
            const int tr = (g.p() - 2) % g.p();
            for (int i = 0; i < n; ++i)
                if (g.trace(i) == tr && i != g.neg_identity()) out[size_t(i)] = 1;
            break;
        }
    }
    return out;
}

// #{(A_i, B_i, C_j) : prod [A_i, B_i] prod C_j = Id, C_j in the j-th class}.
// Passing a precomputed commutator distribution avoids recomputing it across
// a verification grid.
inline Int count(const SurfaceSpec& spec, const FiniteGroup& g, const ClassFunction& comm_dist) {
    ClassFunction f = delta(g, g.identity());
    for (int i = 0; i < spec.genus; ++i) f = convolve(g, f, comm_dist);
    for (auto c : spec.punctures) f = convolve(g, f, class_indicator(g, c));
    return f[size_t(g.identity())];
}

inline Int count(const SurfaceSpec& spec, const FiniteGroup& g) {
    return count(spec, g, commutator_distribution(g));
}

inline Int count(const SurfaceSpec& spec, int p) {
    const FiniteGroup g = build_group(p);
    return count(spec, g);
}

}  // namespace sl2tqft
