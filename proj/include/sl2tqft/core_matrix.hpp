// Vectors and matrices over the localized scalar ring, in the basis of the
// eight core generators. Column j holds the image of generator j; matrices
// act on column vectors from the left.

#pragma once

#include "localized.hpp"

#include <array>

namespace sl2tqft {

inline constexpr int kCoreRank = 8;

// Fixed index order of the core generators; every stored matrix uses it.
enum class Generator : int {
    T1 = 0, TNeg1 = 1, TPlus = 2, TMinus = 3, TBt = 4, S2 = 5, SNeg2 = 6, S2SNeg2 = 7,
};

inline const char* generator_name(Generator g) {
    static constexpr const char* names[kCoreRank] = {
        "T_1", "T_-1", "T_+", "T_-", "T_Bt", "S_2", "S_-2", "S_2xS_-2"};
    return names[static_cast<int>(g)];
}

struct CoreVector {
    std::array<LocalizedScalar, kCoreRank> coords{};

    LocalizedScalar& operator[](int i) { return coords[i]; }
    const LocalizedScalar& operator[](int i) const { return coords[i]; }

    static CoreVector unit(int i) {
        CoreVector v;
        v[i] = LocalizedScalar(1);
        return v;
    }

    friend bool operator==(const CoreVector& x, const CoreVector& y) { return x.coords == y.coords; }
};

class CoreMatrix {
public:
    CoreMatrix() = default;

    LocalizedScalar& at(int r, int c) { return e_[r * kCoreRank + c]; }
    const LocalizedScalar& at(int r, int c) const { return e_[r * kCoreRank + c]; }

    static CoreMatrix identity() {
        CoreMatrix m;
        for (int i = 0; i < kCoreRank; ++i) m.at(i, i) = LocalizedScalar(1);
        return m;
    }

    // Rows given as plain Laurent polynomials; the common constructor for the
    // fixed matrix tables.
    static CoreMatrix from_rows(const std::array<std::array<LaurentPoly, kCoreRank>, kCoreRank>& rows) {
        CoreMatrix m;
        for (int r = 0; r < kCoreRank; ++r)
            for (int c = 0; c < kCoreRank; ++c) m.at(r, c) = LocalizedScalar(rows[r][c]);
        return m;
    }

    friend bool operator==(const CoreMatrix& x, const CoreMatrix& y) { return x.e_ == y.e_; }
    friend bool operator!=(const CoreMatrix& x, const CoreMatrix& y) { return !(x == y); }

    friend CoreMatrix operator*(const CoreMatrix& x, const CoreMatrix& y) {
        CoreMatrix r;
        for (int i = 0; i < kCoreRank; ++i)
            for (int k = 0; k < kCoreRank; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (int j = 0; j < kCoreRank; ++j) {
                    if (y.at(k, j).is_zero()) continue;
                    r.at(i, j) += x.at(i, k) * y.at(k, j);
                }
            }
        return r;
    }

    friend CoreVector operator*(const CoreMatrix& m, const CoreVector& v) {
        CoreVector r;
        for (int i = 0; i < kCoreRank; ++i)
            for (int k = 0; k < kCoreRank; ++k) {
                if (m.at(i, k).is_zero() || v[k].is_zero()) continue;
                r[i] += m.at(i, k) * v[k];
            }
        return r;
    }

    friend CoreMatrix operator*(const LocalizedScalar& s, const CoreMatrix& m) {
        CoreMatrix r;
        for (int i = 0; i < kCoreRank; ++i)
            for (int j = 0; j < kCoreRank; ++j) r.at(i, j) = s * m.at(i, j);
        return r;
    }
    friend CoreMatrix operator+(const CoreMatrix& x, const CoreMatrix& y) {
        CoreMatrix r;
        for (int i = 0; i < kCoreRank; ++i)
            for (int j = 0; j < kCoreRank; ++j) r.at(i, j) = x.at(i, j) + y.at(i, j);
        return r;
    }
    friend CoreMatrix operator-(const CoreMatrix& x, const CoreMatrix& y) {
        CoreMatrix r;
        for (int i = 0; i < kCoreRank; ++i)
            for (int j = 0; j < kCoreRank; ++j) r.at(i, j) = x.at(i, j) - y.at(i, j);
        return r;
    }

    bool all_polynomial() const {
        for (const auto& s : e_)
            if (!s.is_polynomial()) return false;
        return true;
    }

    // Least (A, B) with (q-1)^A (q+1)^B * this having plain Laurent entries.
    std::pair<int, int> denominator_exponents() const {
        int A = 0, B = 0;
        for (const auto& s : e_) {
            A = std::max(A, s.a());
            B = std::max(B, s.b());
        }
        return {A, B};
    }

private:
    std::array<LocalizedScalar, kCoreRank * kCoreRank> e_{};
};

namespace detail {

// Bareiss fraction-free elimination on a square Laurent matrix. Returns the
// determinant; all interior divisions are exact over the domain.
inline LaurentPoly bareiss_det(std::array<std::array<LaurentPoly, kCoreRank>, kCoreRank> m, int n) {
    LaurentPoly prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) { piv = r; break; }
            if (piv < 0) return {};  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                auto& mi = m[i];
                const auto& mk = m[k];
                mi[j] = exact_div(
                    mk[k] * mi[j] - mi[k] * mk[j],
                    prev);
            }
        prev = m[k][k];
    }
    LaurentPoly d = m[n - 1][n - 1];
    return sign == 1 ? d : -d;
}

}  // namespace detail

// Determinant of a matrix with plain Laurent entries (throws otherwise).
inline LaurentPoly laurent_det(const CoreMatrix& m) {
    std::array<std::array<LaurentPoly, kCoreRank>, kCoreRank> a;
    for (int i = 0; i < kCoreRank; ++i)
        for (int j = 0; j < kCoreRank; ++j) a[i][j] = m.at(i, j).as_laurent();
    return detail::bareiss_det(a, kCoreRank);
}

// Adjugate via signed 7x7 minors, each by fraction-free elimination.
// adj(M) * M = det(M) * I.
inline CoreMatrix laurent_adjugate(const CoreMatrix& m) {
    CoreMatrix adj;
    for (int r = 0; r < kCoreRank; ++r)
        for (int c = 0; c < kCoreRank; ++c) {
            std::array<std::array<LaurentPoly, kCoreRank>, kCoreRank> minor{};
            int mi = 0;
            for (int i = 0; i < kCoreRank; ++i) {
                if (i == r) continue;
                int mj = 0;
                for (int j = 0; j < kCoreRank; ++j) {
                    if (j == c) continue;
                    minor[mi][mj] = m.at(i, j).as_laurent();
                    ++mj;
                }
                ++mi;
            }
            LaurentPoly d = detail::bareiss_det(minor, kCoreRank - 1);
            adj.at(c, r) = LocalizedScalar((r + c) % 2 == 0 ? d : -d);
        }
    return adj;
}

// Rank over the fraction field. Denominators are units, so clearing them
// does not change the rank.
inline int fraction_field_rank(const CoreMatrix& m) {
    auto [A, B] = m.denominator_exponents();
    const LocalizedScalar clear(q_minus_1().pow(A) * q_plus_1().pow(B));
    std::array<std::array<LaurentPoly, kCoreRank>, kCoreRank> a;
    for (int i = 0; i < kCoreRank; ++i)
        for (int j = 0; j < kCoreRank; ++j) a[i][j] = (clear * m.at(i, j)).as_laurent();
    int rank = 0;
    int row = 0;
    for (int col = 0; col < kCoreRank && row < kCoreRank; ++col) {
        int piv = -1;
        for (int r = row; r < kCoreRank; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        for (int r = row + 1; r < kCoreRank; ++r) {
            if (a[r][col].is_zero()) continue;
            // cross-multiplication keeps everything in the Laurent ring
            const LaurentPoly pr = a[row][col];
            const LaurentPoly rr = a[r][col];
            for (int cc = col; cc < kCoreRank; ++cc)
                a[r][cc] =
                    a[r][cc] * pr - a[row][cc] * rr;
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace sl2tqft
