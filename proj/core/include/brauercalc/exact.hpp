#ifndef BRAUERCALC_EXACT_HPP
#define BRAUERCALC_EXACT_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "brauercalc/errors.hpp"

namespace brc {

/// Arbitrary-precision signed integer. GMP keeps a canonical zero and never
/// overflows, which is all the invariants ask for.
using Int = mpz_class;
/// Exact rational, stored in lowest terms with positive denominator.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// Gaussian rationals
// ---------------------------------------------------------------------------

/// Element of Q[i]. Equality is exact; components stay canonical because
/// mpq_class arithmetic canonicalizes.
struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rat r) : re(std::move(r)), im(0) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return GaussianRational(Rat(0), Rat(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }
    /// |z|^2, a nonnegative rational.
    Rat norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        Rat n = o.norm();
        if (sgn(n) == 0) throw DomainError("GaussianRational: division by zero");
        GaussianRational t = *this * o.conj();
        return {t.re / n, t.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// ---------------------------------------------------------------------------
// Integer matrices and Smith normal form
// ---------------------------------------------------------------------------

/// Dense matrix over Z. Coboundary operators are kept in their own sparse
/// form inside the cohomology engine; this type serves the normal-form and
/// solver API, where matrices are small.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> operator*(const std::vector<Int>& x) const;
    IntMatrix transposed() const;

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row[i] += c * row[j]
    void add_row(std::size_t i, std::size_t j, const Int& c);
    void add_col(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    /// Determinant by fraction-free elimination; used on the small unimodular
    /// transforms in tests.
    Int det() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// u * a * v = diag(d) padded with zeros, det u, det v in {+1,-1},
/// d nonzero with d[i] | d[i+1].
struct SmithForm {
    std::vector<Int> d;
    IntMatrix u;
    IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group in canonical form: Z^free_rank + sum of
/// Z/torsion[i] with torsion[i] >= 2 and torsion[i] | torsion[i+1].
struct FgAbelianGroup {
    long free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FgAbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    /// Order of the torsion part (the whole group must be finite to call order()).
    Int torsion_order() const;
    std::string str() const;
};

/// Brings an arbitrary list of cyclic orders (>= 0 entries allowed: 0 denotes
/// a free factor) into canonical divisor-chain form without factoring,
/// by repeated gcd/lcm exchanges.
FgAbelianGroup canonical_group(long free_rank, std::vector<Int> orders);

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Z^cols / (row space of a): rows are relations among cols generators.
FgAbelianGroup cokernel_presentation(const IntMatrix& a);

/// Exact solution of a x = b over Z, or nullopt if none exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

// ---------------------------------------------------------------------------
// Dense linear algebra over F2 (bit-packed)
// ---------------------------------------------------------------------------

/// Row-major bit matrix over Z/2 with word-packed rows.
class F2Matrix {
public:
    F2Matrix() : rows_(0), cols_(0), words_(0) {}
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        uint64_t m = uint64_t(1) << (j % 64);
        if (v) bits_[i * words_ + j / 64] |= m;
        else bits_[i * words_ + j / 64] &= ~m;
    }
    void xor_row(std::size_t dst, std::size_t src);

    std::size_t rank() const;
    F2Matrix transposed() const;

    /// One solution of a x = b, or nullopt.
    std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& b) const;
    /// Basis of the right kernel, one vector per column of the result.
    std::vector<std::vector<uint8_t>> kernel_basis() const;

    std::vector<uint8_t> apply(const std::vector<uint8_t>& x) const;

private:
    std::size_t rows_, cols_, words_;
    std::vector<uint64_t> bits_;
};

/// Solve over Z/2; vectors use 0/1 entries.
std::optional<std::vector<uint8_t>> mod2_solve(const F2Matrix& a, const std::vector<uint8_t>& b);

} // namespace brc

#endif
