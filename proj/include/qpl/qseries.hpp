#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qpl/errors.hpp"
#include "qpl/zpoly.hpp"

namespace qpl {

// Truncated Laurent series in q with ZPoly coefficients.
//
// A series stores exact coefficients for every exponent in the window
// [min_exp, valid_to]; valid_to is the largest exponent through which the
// coefficients are guaranteed exact.  Every constructor and operation keeps
// min_exp a *support bound*: coefficients below the stored window are
// mathematically zero, which is what makes zero-padding the window downward
// (padded_down_to) sound.  The empty series (valid_to = min_exp - 1) carries
// no coefficient information at all.
class QSeries {
public:
    QSeries() : min_exp_(0), valid_to_(-1) {}

    long min_exp() const { return min_exp_; }
    long valid_to() const { return valid_to_; }
    bool empty_window() const { return valid_to_ < min_exp_; }

    // Series with coefficient list starting at exponent min_exp.
    static QSeries from_coeffs(long min_exp, std::vector<ZPoly> cs) {
        QSeries s;
        s.min_exp_ = min_exp;
        s.valid_to_ = min_exp + static_cast<long>(cs.size()) - 1;
        s.coeffs_ = std::move(cs);
        s.normalize_empty();
        return s;
    }

    // Polynomial literal: exact everywhere, so the caller picks valid_to
    // (>= the highest listed exponent).
    static QSeries polynomial(long min_exp, std::vector<ZPoly> cs, long valid_to) {
        if (valid_to < min_exp + static_cast<long>(cs.size()) - 1)
            throw std::invalid_argument("QSeries::polynomial: valid_to below listed coefficients");
        QSeries s;
        s.min_exp_ = min_exp;
        s.valid_to_ = valid_to;
        s.coeffs_ = std::move(cs);
        s.coeffs_.resize(static_cast<std::size_t>(valid_to - min_exp + 1));
        s.normalize_empty();
        return s;
    }

    // The zero series, valid through the given exponent (empty window).
    static QSeries zero(long valid_to) {
        QSeries s;
        s.min_exp_ = valid_to + 1;
        s.valid_to_ = valid_to;
        return s;
    }

    static QSeries one(long valid_to) { return polynomial(0, {ZPoly(1)}, valid_to); }

    // c * q^q_pow, valid through valid_to.
    static QSeries monomial(ZPoly c, long q_pow, long valid_to) {
        if (c.is_zero()) return zero(valid_to);
        return polynomial(q_pow, {std::move(c)}, valid_to);
    }

    // Exact coefficient of q^n.  Strict: asking outside [min_exp, valid_to]
    // is an error, never a silent zero.
    const ZPoly& coefficient(long n) const {
        if (n > valid_to_)
            throw OutOfValidRange("coefficient: exponent " + std::to_string(n) +
                                  " beyond valid_to " + std::to_string(valid_to_));
        if (n < min_exp_)
            throw OutOfValidRange("coefficient: exponent " + std::to_string(n) +
                                  " below min_exp " + std::to_string(min_exp_));
        return coeffs_[static_cast<std::size_t>(n - min_exp_)];
    }

    // Like coefficient(), but exponents below the window read as the zero
    // they provably are.  Reading beyond valid_to is still an error.
    const ZPoly& coefficient_or_zero(long n) const {
        static const ZPoly kZero{};
        if (n > valid_to_)
            throw OutOfValidRange("coefficient_or_zero: exponent " + std::to_string(n) +
                                  " beyond valid_to " + std::to_string(valid_to_));
        if (n < min_exp_) return kZero;
        return coeffs_[static_cast<std::size_t>(n - min_exp_)];
    }

    // Extend the stored window down to exponent e with explicit zeros.
    QSeries padded_down_to(long e) const {
        if (e >= min_exp_) return *this;
        QSeries s;
        s.min_exp_ = e;
        s.valid_to_ = valid_to_;
        s.coeffs_.assign(static_cast<std::size_t>(min_exp_ - e), ZPoly{});
        s.coeffs_.insert(s.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return s;
    }

    // Forget coefficients above new_valid_to.
    QSeries truncated_to(long new_valid_to) const {
        if (new_valid_to >= valid_to_) return *this;
        QSeries s;
        s.min_exp_ = min_exp_;
        s.valid_to_ = new_valid_to;
        if (new_valid_to >= min_exp_)
            s.coeffs_.assign(coeffs_.begin(),
                             coeffs_.begin() + static_cast<std::ptrdiff_t>(new_valid_to - min_exp_ + 1));
        s.normalize_empty();
        return s;
    }

    // Shift all exponents by e (multiplication by q^e).
    QSeries shifted(long e) const {
        QSeries s = *this;
        s.min_exp_ += e;
        s.valid_to_ += e;
        return s;
    }

    friend QSeries add(const QSeries& a, const QSeries& b) {
        QSeries s;
        s.min_exp_ = std::min(a.min_exp_, b.min_exp_);
        s.valid_to_ = std::min(a.valid_to_, b.valid_to_);
        if (s.valid_to_ < s.min_exp_) {
            s.normalize_empty();
            return s;
        }
        s.coeffs_.assign(static_cast<std::size_t>(s.valid_to_ - s.min_exp_ + 1), ZPoly{});
        for (long n = s.min_exp_; n <= s.valid_to_; ++n) {
            ZPoly& c = s.coeffs_[static_cast<std::size_t>(n - s.min_exp_)];
            if (n >= a.min_exp_ && n <= a.valid_to_) c += a.coeffs_[static_cast<std::size_t>(n - a.min_exp_)];
            if (n >= b.min_exp_ && n <= b.valid_to_) c += b.coeffs_[static_cast<std::size_t>(n - b.min_exp_)];
        }
        return s;
    }

    friend QSeries mul(const QSeries& a, const QSeries& b) {
        QSeries s;
        s.min_exp_ = a.min_exp_ + b.min_exp_;
        s.valid_to_ = std::min(a.valid_to_ + b.min_exp_, b.valid_to_ + a.min_exp_);
        if (s.valid_to_ < s.min_exp_) {
            s.normalize_empty();
            return s;
        }
        s.coeffs_.assign(static_cast<std::size_t>(s.valid_to_ - s.min_exp_ + 1), ZPoly{});
        for (long i = a.min_exp_; i <= a.valid_to_; ++i) {
            const ZPoly& ai = a.coeffs_[static_cast<std::size_t>(i - a.min_exp_)];
            if (ai.is_zero()) continue;
            const long jmax = std::min(b.valid_to_, s.valid_to_ - i);
            for (long j = b.min_exp_; j <= jmax; ++j) {
                const ZPoly& bj = b.coeffs_[static_cast<std::size_t>(j - b.min_exp_)];
                if (bj.is_zero()) continue;
                ZPoly::add_mul(s.coeffs_[static_cast<std::size_t>(i + j - s.min_exp_)], ai, bj);
            }
        }
        for (auto& c : s.coeffs_) c.trim();
        return s;
    }

    friend QSeries negated(const QSeries& a) {
        QSeries s = a;
        for (auto& c : s.coeffs_) c = -c;
        return s;
    }

    friend QSeries sub(const QSeries& a, const QSeries& b) { return add(a, negated(b)); }

    friend QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
    friend QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

    // Two series are equal when they certify the same order and agree
    // coefficient-wise through it (exponents below a window count as zero).
    friend bool operator==(const QSeries& a, const QSeries& b) {
        if (a.valid_to_ != b.valid_to_) return false;
        const long lo = std::min(a.min_exp_, b.min_exp_);
        for (long n = lo; n <= a.valid_to_; ++n)
            if (a.coefficient_or_zero(n) != b.coefficient_or_zero(n)) return false;
        return true;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    // Multiplicative inverse through `order` by the standard coefficient
    // recurrence.  Requires constant term +-1 and no stored nonzero below q^0.
    friend QSeries invert_unit(const QSeries& a, long order) {
        if (order < 0) throw std::invalid_argument("invert_unit: negative order");
        if (a.valid_to_ < order)
            throw std::invalid_argument("invert_unit: input only valid to " +
                                        std::to_string(a.valid_to_) + ", need " + std::to_string(order));
        if (a.min_exp_ > 0)
            throw NotAUnit("invert_unit: constant term is zero (min_exp > 0)");
        for (long n = a.min_exp_; n < 0; ++n)
            if (!a.coeffs_[static_cast<std::size_t>(n - a.min_exp_)].is_zero())
                throw NotAUnit("invert_unit: nonzero coefficient at negative exponent " + std::to_string(n));
        const ZPoly& c0 = a.coefficient_or_zero(0);
        if (!c0.is_constant_plus_minus_one())
            throw NotAUnit("invert_unit: constant term is not +1 or -1 (got " + c0.str() + ")");
        const bool plus = (c0.z_coeff(0) == 1);

        QSeries s;
        s.min_exp_ = 0;
        s.valid_to_ = order;
        s.coeffs_.assign(static_cast<std::size_t>(order + 1), ZPoly{});
        s.coeffs_[0] = c0;  // 1/c0 = c0 for c0 = +-1
        for (long n = 1; n <= order; ++n) {
            ZPoly acc;
            const long kmax = std::min(n, a.valid_to_);
            for (long k = 1; k <= kmax; ++k) {
                const ZPoly& ak = a.coefficient_or_zero(k);
                if (ak.is_zero()) continue;
                ZPoly::add_mul(acc, ak, s.coeffs_[static_cast<std::size_t>(n - k)]);
            }
            acc.trim();
            s.coeffs_[static_cast<std::size_t>(n)] = plus ? -acc : std::move(acc);
        }
        return s;
    }

    // Substitute q -> q^d.  Intermediate exponents are known zeros, so the
    // result is valid through d*valid_to + (d-1).
    friend QSeries dilate(const QSeries& a, long d) {
        if (d < 1) throw std::invalid_argument("dilate: d must be >= 1");
        QSeries s;
        s.min_exp_ = d * a.min_exp_;
        s.valid_to_ = d * a.valid_to_ + (d - 1);
        if (s.valid_to_ < s.min_exp_) {
            s.normalize_empty();
            return s;
        }
        s.coeffs_.assign(static_cast<std::size_t>(s.valid_to_ - s.min_exp_ + 1), ZPoly{});
        for (long e = a.min_exp_; e <= a.valid_to_; ++e)
            s.coeffs_[static_cast<std::size_t>(d * e - s.min_exp_)] =
                a.coeffs_[static_cast<std::size_t>(e - a.min_exp_)];
        return s;
    }

    bool all_coefficients_nonnegative() const {
        for (const auto& c : coeffs_)
            if (!c.all_nonnegative()) return false;
        return true;
    }

    // Evaluate the truncated series at complex q (and z for the marker),
    // summing the stored window only.
    std::complex<double> eval(std::complex<double> q, std::complex<double> z = {0.0, 0.0}) const {
        if (empty_window()) return {0.0, 0.0};
        std::complex<double> acc{0.0, 0.0};
        for (long n = valid_to_; n >= min_exp_; --n)
            acc = acc * q + coeffs_[static_cast<std::size_t>(n - min_exp_)].eval(z);
        // acc now holds sum c_n q^(n - min_exp); restore the offset.
        std::complex<double> qpow{1.0, 0.0};
        long e = min_exp_;
        std::complex<double> base = e < 0 ? 1.0 / q : q;
        for (long k = std::abs(e); k > 0; --k) qpow *= base;
        return acc * qpow;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (long n = min_exp_; n <= valid_to_; ++n) {
            const ZPoly& c = coeffs_[static_cast<std::size_t>(n - min_exp_)];
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (c.is_constant()) os << c.str();
            else os << "(" << c.str() << ")";
            if (n != 0) os << "*q^" << n;
        }
        if (first) os << "0";
        os << "  [valid_to " << valid_to_ << "]";
        return os.str();
    }

private:
    void normalize_empty() {
        if (valid_to_ < min_exp_) {
            min_exp_ = valid_to_ + 1;
            coeffs_.clear();
        }
    }

    long min_exp_;
    long valid_to_;
    std::vector<ZPoly> coeffs_;  // dense over [min_exp_, valid_to_]
};

}  // namespace qpl
