#pragma once

#include <graphpoly/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace graphpoly {

/// Dense univariate polynomial over an exact coefficient ring.
/// Coefficient at index k is the coefficient of the k-th power; the
/// representation is normalized (no zero leading coefficient).
template <class R>
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(R constant) : coeffs_{std::move(constant)} { normalize(); }
    explicit DensePoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static DensePoly zero() { return DensePoly(); }
    static DensePoly one() { return DensePoly(R(1)); }
    static DensePoly variable() { return monomial(1, R(1)); }
    static DensePoly monomial(size_t power, R coeff) {
        std::vector<R> c(power + 1, R(0));
        c[power] = std::move(coeff);
        return DensePoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    R coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R(0); }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        std::vector<R> c(std::max(a.coeffs_.size(), b.coeffs_.size()), R(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return DensePoly(std::move(c));
    }
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
        std::vector<R> c(std::max(a.coeffs_.size(), b.coeffs_.size()), R(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return DensePoly(std::move(c));
    }
    DensePoly operator-() const {
        std::vector<R> c = coeffs_;
        for (auto& x : c) x = -x;
        return DensePoly(std::move(c));
    }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<R> c(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return DensePoly(std::move(c));
    }
    DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
    DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }
    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    DensePoly scaled(const R& s) const {
        std::vector<R> c = coeffs_;
        for (auto& x : c) x *= s;
        return DensePoly(std::move(c));
    }
    DensePoly shifted(size_t power) const {
        if (is_zero()) return zero();
        std::vector<R> c(coeffs_.size() + power, R(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i + power] = coeffs_[i];
        return DensePoly(std::move(c));
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }

    // Horner evaluation; the scalar type may promote (e.g. Int poly at a Rational point).
    template <class S>
    S eval(const S& a) const {
        S acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * a + S(coeffs_[i]);
        return acc;
    }
    double eval_double(double a) const {
        double acc = 0.0;
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * a + to_double(coeffs_[i]);
        return acc;
    }

private:
    std::vector<R> coeffs_;
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

/// Dense bivariate polynomial; c[i][j] is the coefficient of x^i y^j.
template <class R>
class DenseBiPoly {
public:
    DenseBiPoly() = default;
    explicit DenseBiPoly(R constant) {
        if (constant != 0) c_ = {{std::move(constant)}};
    }

    static DenseBiPoly zero() { return DenseBiPoly(); }
    static DenseBiPoly one() { return DenseBiPoly(R(1)); }
    static DenseBiPoly monomial(size_t i, size_t j, R coeff) {
        DenseBiPoly p;
        p.set(i, j, std::move(coeff));
        return p;
    }
    static DenseBiPoly var_x() { return monomial(1, 0, R(1)); }
    static DenseBiPoly var_y() { return monomial(0, 1, R(1)); }

    bool is_zero() const { return c_.empty(); }
    int x_degree() const { return static_cast<int>(c_.size()) - 1; }
    int y_degree() const {
        int d = -1;
        for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
        return d;
    }
    R coeff(size_t i, size_t j) const {
        if (i >= c_.size() || j >= c_[i].size()) return R(0);
        return c_[i][j];
    }
    void set(size_t i, size_t j, R v) {
        if (c_.size() <= i) c_.resize(i + 1);
        if (c_[i].size() <= j) c_[i].resize(j + 1, R(0));
        c_[i][j] = std::move(v);
        normalize();
    }

    friend DenseBiPoly operator+(const DenseBiPoly& a, const DenseBiPoly& b) {
        DenseBiPoly r = a;
        for (size_t i = 0; i < b.c_.size(); ++i)
            for (size_t j = 0; j < b.c_[i].size(); ++j) r.add_term(i, j, b.c_[i][j]);
        r.normalize();
        return r;
    }
    friend DenseBiPoly operator-(const DenseBiPoly& a, const DenseBiPoly& b) {
        DenseBiPoly r = a;
        for (size_t i = 0; i < b.c_.size(); ++i)
            for (size_t j = 0; j < b.c_[i].size(); ++j) r.add_term(i, j, -b.c_[i][j]);
        r.normalize();
        return r;
    }
    friend DenseBiPoly operator*(const DenseBiPoly& a, const DenseBiPoly& b) {
        DenseBiPoly r;
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < a.c_[i].size(); ++j) {
                if (a.c_[i][j] == 0) continue;
                for (size_t k = 0; k < b.c_.size(); ++k)
                    for (size_t l = 0; l < b.c_[k].size(); ++l) {
                        if (b.c_[k][l] == 0) continue;
                        r.add_term(i + k, j + l, a.c_[i][j] * b.c_[k][l]);
                    }
            }
        r.normalize();
        return r;
    }
    DenseBiPoly& operator+=(const DenseBiPoly& o) { return *this = *this + o; }
    DenseBiPoly& operator*=(const DenseBiPoly& o) { return *this = *this * o; }

    DenseBiPoly scaled(const R& s) const {
        DenseBiPoly r = *this;
        for (auto& row : r.c_)
            for (auto& x : row) x *= s;
        r.normalize();
        return r;
    }

    friend bool operator==(const DenseBiPoly& a, const DenseBiPoly& b) { return a.c_ == b.c_; }

    template <class S>
    S eval(const S& x, const S& y) const {
        S acc(0);
        for (size_t i = c_.size(); i-- > 0;) {
            S row(0);
            for (size_t j = c_[i].size(); j-- > 0;) row = row * y + S(c_[i][j]);
            acc = acc * x + row;
        }
        return acc;
    }

    // Collapse y to a constant, leaving a univariate polynomial in x.
    DensePoly<R> at_y(const R& y) const {
        std::vector<R> out(c_.size(), R(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            R row(0);
            for (size_t j = c_[i].size(); j-- > 0;) row = row * y + c_[i][j];
            out[i] = row;
        }
        return DensePoly<R>(std::move(out));
    }

    const std::vector<std::vector<R>>& rows() const { return c_; }

private:
    std::vector<std::vector<R>> c_;
    void add_term(size_t i, size_t j, const R& v) {
        if (v == 0) return;
        if (c_.size() <= i) c_.resize(i + 1);
        if (c_[i].size() <= j) c_[i].resize(j + 1, R(0));
        c_[i][j] += v;
    }
    void normalize() {
        for (auto& row : c_)
            while (!row.empty() && row.back() == 0) row.pop_back();
        while (!c_.empty() && c_.back().empty()) c_.pop_back();
    }
};

using Poly = DensePoly<Rational>;
using IntPoly = DensePoly<Int>;
using BiPoly = DenseBiPoly<Rational>;
using IntBiPoly = DenseBiPoly<Int>;

inline Poly to_rational(const IntPoly& p) {
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
    return Poly(std::move(c));
}

inline BiPoly to_rational(const IntBiPoly& p) {
    BiPoly r;
    for (size_t i = 0; i < p.rows().size(); ++i)
        for (size_t j = 0; j < p.rows()[i].size(); ++j)
            if (p.rows()[i][j] != 0) r.set(i, j, Rational(p.rows()[i][j]));
    return r;
}

// Substitute x -> (x + shift), e.g. to turn T(.,y0) into a polynomial in z = x - 1.
template <class R>
DensePoly<R> compose_shift(const DensePoly<R>& p, const R& shift) {
    DensePoly<R> lin(std::vector<R>{shift, R(1)});
    DensePoly<R> acc;
    for (size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * lin + DensePoly<R>(p.coeffs()[i]);
    return acc;
}

template <class R>
DensePoly<R> derivative(const DensePoly<R>& p) {
    if (p.degree() <= 0) return DensePoly<R>::zero();
    std::vector<R> c(static_cast<size_t>(p.degree()), R(0));
    for (size_t k = 1; k < p.coeffs().size(); ++k) c[k - 1] = p.coeffs()[k] * R(static_cast<long>(k));
    return DensePoly<R>(std::move(c));
}

// Field-coefficient division with remainder.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    int db = b.degree();
    if (a.degree() < db) return {Poly::zero(), a};
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
    Rational lead = b.coeffs().back();
    while (static_cast<int>(rem.size()) - 1 >= db) {
        int dr = static_cast<int>(rem.size()) - 1;
        Rational q = rem.back() / lead;
        quot[static_cast<size_t>(dr - db)] = q;
        for (int i = 0; i < db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= q * b.coeffs()[static_cast<size_t>(i)];
        rem.pop_back();  // leading term cancels exactly
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

// Monic gcd by Euclid's algorithm.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.coeffs().back());
}

/// Yun's squarefree decomposition: p = prod_i factor_i^{multiplicity_i} with
/// pairwise coprime squarefree factors. Input must be nonzero.
struct SquarefreeFactor {
    Poly factor;
    int multiplicity;
};

inline std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.degree() == 0) return out;
    Poly f = p.scaled(Rational(1) / p.coeffs().back());
    Poly fp = derivative(f);
    Poly a = poly_gcd(f, fp);
    Poly b = poly_divmod(f, a).first;
    Poly c = poly_divmod(fp, a).first;
    Poly d = c - derivative(b);
    for (int i = 1; b.degree() > 0; ++i) {
        Poly ai = poly_gcd(b, d);
        if (ai.degree() > 0) out.push_back({ai, i});
        b = poly_divmod(b, ai).first;
        c = poly_divmod(d, ai).first;
        d = c - derivative(b);
    }
    return out;
}

// Renders "z^3 - 3*z + 1" style text with exact "p/q" coefficients,
// highest power first.
template <class R>
std::string poly_to_string(const DensePoly<R>& p, const std::string& var = "z") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        R c = p.coeff(static_cast<size_t>(k));
        if (c == 0) continue;
        bool neg = c < 0;
        R mag = neg ? R(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mags = to_string(mag);
        if (k == 0) {
            out += mags;
        } else {
            if (mags != "1") out += mags + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace graphpoly
