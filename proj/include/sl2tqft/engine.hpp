// Evaluation of the reduced almost-TQFT on a surface word
// (disc, g genus tubes, one tube per puncture, co-disc), and the closed-form
// expressions for the same classes as a second computation path.

#pragma once

#include "generators.hpp"

#include <vector>

namespace sl2tqft {

enum class PunctureClass { Id, NegId, JPlus, JMinus };

struct UnsupportedGenus : std::runtime_error {
    explicit UnsupportedGenus(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownLabel : std::runtime_error {
    explicit UnknownLabel(const std::string& what) : std::runtime_error(what) {}
};

// Genus plus a multiset of puncture classes; the object the TQFT evaluates.
struct SurfaceSpec {
    int genus = 0;
    std::vector<PunctureClass> punctures;

    int count(PunctureClass c) const {
        int n = 0;
        for (auto p : punctures)
            if (p == c) ++n;
        return n;
    }
    int s() const { return int(punctures.size()); }
    int r_plus() const { return count(PunctureClass::JPlus); }
    int r_minus() const { return count(PunctureClass::JMinus); }
    int t() const { return count(PunctureClass::NegId); }
    int r() const { return r_plus() + r_minus(); }
    int sigma_sign() const { return (r_minus() + t()) % 2 == 0 ? 1 : -1; }
};

// Reduced genus tube Z(L) o eta^{-1}.
inline const CoreMatrix& rz_genus() {
    static const CoreMatrix m = z_genus() * eta_inv();
    return m;
}

inline const CoreMatrix& reduced_tube(PunctureClass c) {
    switch (c) {
        case PunctureClass::Id:     return rz_id();
        case PunctureClass::NegId:  return rz_negid();
        case PunctureClass::JPlus:  return rz_jplus();
        case PunctureClass::JMinus: return rz_jminus();
    }
    throw UnknownLabel("reduced_tube: bad puncture class");
}

// Tube labels for explicit word composition.
enum class TubeLabel { L, L_Id, L_NegId, L_JPlus, L_JMinus };

// Right-to-left product of the reduced matrices of a word of tubes.
inline CoreMatrix compose_word(const std::vector<TubeLabel>& word) {
    CoreMatrix acc = CoreMatrix::identity();
    for (auto label : word) {
        const CoreMatrix* m = nullptr;
        switch (label) {
            case TubeLabel::L:        m = &rz_genus(); break;
            case TubeLabel::L_Id:     m = &rz_id(); break;
            case TubeLabel::L_NegId:  m = &rz_negid(); break;
            case TubeLabel::L_JPlus:  m = &rz_jplus(); break;
            case TubeLabel::L_JMinus: m = &rz_jminus(); break;
        }
        if (m == nullptr) throw UnknownLabel("compose_word: bad label");
        acc = *m * acc;
    }
    return acc;
}

// TQFT path: insert the unit disc class, apply the genus tube g times and one
// tube per puncture, project back onto T_1 and divide by (q^3-q)^{g+s}.
// The result must come out denominator-free; anything else means a broken
// transcription and raises.
inline LaurentPoly evaluate(const SurfaceSpec& spec) {
    if (spec.genus < 0) throw UnsupportedGenus("evaluate: genus must be >= 0");
    CoreVector v = CoreVector::unit(0);
    for (int i = 0; i < spec.genus; ++i) v = rz_genus() * v;
    for (auto c : spec.punctures) v = reduced_tube(c) * v;
    const LocalizedScalar norm(sl2_class().pow(spec.genus + spec.s()));
    // clearing assertion: every coordinate of the state vector must be
    // denominator-free once the normalization is multiplied back in
    for (int i = 0; i < kCoreRank; ++i) (void)(v[i] * norm).as_laurent();
    return exact_div(v[0], norm).as_laurent();
}

namespace detail {

inline LaurentPoly half(const LaurentPoly& p) { return exact_div(p, LaurentPoly(2)); }

inline LaurentPoly two_pow(int e) {
    Int c = 1;
    for (int i = 0; i < e; ++i) c *= 2;
    return LaurentPoly(std::move(c));
}

// Untwisted representation-variety class in (g, r): valid for r >= 1, and
// the r = 0 evaluation that the correction term completes.
inline LaurentPoly rep_class_untwisted(int g, int r) {
    const LaurentPoly q = LaurentPoly::q();
    const LaurentPoly a = q_minus_1(), b = q_plus_1();
    const LaurentPoly q2m1 = a * b;
    const LaurentPoly f = q2m1.pow(2 * g + r - 1) * q_pow(2 * g - 1);
    const LaurentPoly h1 = a.pow(2 * g + r - 1) * q_pow(2 * g - 1) * b * (two_pow(2 * g) + q - LaurentPoly(3));
    const LaurentPoly h2 = b.pow(2 * g + r - 1) * q_pow(2 * g - 1) * a * (two_pow(2 * g) + q - LaurentPoly(1));
    return f + half(r % 2 == 0 ? h1 + h2 : h1 - h2);
}

// Twisted representation-variety class in (g, r), r >= 0 before correction;
// the second term carries (-1)^{r+1}.
inline LaurentPoly rep_class_twisted(int g, int r) {
    const LaurentPoly a = q_minus_1(), b = q_plus_1();
    const LaurentPoly f = a.pow(2 * g + r - 1) * b * q_pow(2 * g - 1) *
                          (b.pow(2 * g + r - 2) + two_pow(2 * g - 1) - LaurentPoly(1));
    const LaurentPoly g2 = two_pow(2 * g - 1) * b.pow(2 * g + r - 1) * a * q_pow(2 * g - 1);
    return (r % 2 == 0) ? f - g2 : f + g2;
}

}  // namespace detail

// Closed-form path: dispatches on (g, r, sigma-sign); the r = 0 instances
// of both branches need the extra q(q^2-1)^{2g-1} coming from the vanishing
// eigenvalue of the puncture tube.
inline LaurentPoly closed_form(const SurfaceSpec& spec) {
    if (spec.genus < 1)
        throw UnsupportedGenus("closed_form: stated for closed surfaces of genus >= 1");
    const int g = spec.genus, r = spec.r();
    LaurentPoly f = spec.sigma_sign() == 1 ? detail::rep_class_untwisted(g, r)
                                           : detail::rep_class_twisted(g, r);
    if (r == 0) f += LaurentPoly::q() * (q_minus_1() * q_plus_1()).pow(2 * g - 1);
    return f;
}

}  // namespace sl2tqft
