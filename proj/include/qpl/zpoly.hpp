#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qpl {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in the overline-marker variable z with exact integer
// coefficients.  Canonical form: no trailing zero coefficients; the zero
// polynomial stores nothing.
class ZPoly {
public:
    ZPoly() = default;

    ZPoly(long long constant) {  // NOLINT: implicit by design, mirrors integer literals
        if (constant != 0) coeffs_.emplace_back(constant);
    }

    explicit ZPoly(BigInt constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }

    // Coefficients listed from z^0 upward.
    ZPoly(std::initializer_list<long long> cs) {
        coeffs_.assign(cs.begin(), cs.end());
        trim();
    }

    static ZPoly monomial(BigInt c, int z_pow) {
        ZPoly p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(z_pow) + 1, BigInt(0));
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree in z; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of z^i; zero beyond the stored range.
    const BigInt& z_coeff(int i) const {
        static const BigInt kZero{0};
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    bool is_constant() const { return coeffs_.size() <= 1; }

    bool is_constant_plus_minus_one() const {
        return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
    }

    bool all_nonnegative() const {
        for (const auto& c : coeffs_)
            if (c < 0) return false;
        return true;
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.trim();
        return r;
    }

    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        r.trim();
        return r;
    }

    friend ZPoly operator-(const ZPoly& a) {
        ZPoly r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        add_mul(r, a, b);
        r.trim();
        return r;
    }

    ZPoly& operator+=(const ZPoly& b) {
        if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size());
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
        trim();
        return *this;
    }

    ZPoly& operator-=(const ZPoly& b) {
        if (coeffs_.size() < b.coeffs_.size()) coeffs_.resize(b.coeffs_.size());
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
        trim();
        return *this;
    }

    // acc += a * b without materializing the product.  Leaves acc untrimmed;
    // callers batching accumulations trim once at the end.
    static void add_mul(ZPoly& acc, const ZPoly& a, const ZPoly& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return;
        const std::size_t need = a.coeffs_.size() + b.coeffs_.size() - 1;
        if (acc.coeffs_.size() < need) acc.coeffs_.resize(need);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            const BigInt& ai = a.coeffs_[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                acc.coeffs_[i + j] += ai * b.coeffs_[j];
            }
        }
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    // Evaluate at a complex value of z.
    std::complex<double> eval(std::complex<double> z) const {
        std::complex<double> acc{0.0, 0.0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * z + std::complex<double>(it->convert_to<double>(), 0.0);
        return acc;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (i == 0) {
                os << mag.str();
            } else {
                if (mag != 1) os << mag.str() << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    std::vector<BigInt> coeffs_;
};

}  // namespace qpl
