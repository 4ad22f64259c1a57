#pragma once

#include <sstream>
#include <string>

#include "qpl/errors.hpp"
#include "qpl/qseries.hpp"
#include "qpl/zpoly.hpp"

namespace qpl {

// Parameter of the form c * z^z_pow * q^q_pow with c in {-1, 0, +1}.
// These are the only shapes the specialized generating functions need for
// the master-sum parameters.
struct Monomial {
    int c = 0;        // -1, 0, +1
    int z_pow = 0;    // >= 0
    long q_pow = 0;   // may be negative

    Monomial() = default;

    Monomial(int c_, int z_pow_, long q_pow_) : c(c_), z_pow(z_pow_), q_pow(q_pow_) {
        if (c < -1 || c > 1) throw std::invalid_argument("Monomial: coefficient must be -1, 0 or +1");
        if (z_pow < 0) throw std::invalid_argument("Monomial: z_pow must be nonnegative");
        if (c == 0) {  // canonical zero
            z_pow = 0;
            q_pow = 0;
        }
    }

    static Monomial zero() { return {}; }
    static Monomial q_power(long e) { return {1, 0, e}; }

    bool is_zero() const { return c == 0; }

    // This monomial multiplied by q^delta.
    Monomial shifted_q(long delta) const {
        if (c == 0) return {};
        return {c, z_pow, q_pow + delta};
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.c == b.c && a.z_pow == b.z_pow && a.q_pow == b.q_pow;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // The monomial as a series literal, valid through valid_to.
    QSeries to_series(long valid_to) const {
        if (c == 0) return QSeries::zero(valid_to);
        return QSeries::monomial(ZPoly::monomial(BigInt(c), z_pow), q_pow, valid_to);
    }

    std::string str() const {
        if (c == 0) return "0";
        std::ostringstream os;
        if (c < 0) os << "-";
        bool bare = true;
        if (z_pow > 0) {
            os << "z";
            if (z_pow > 1) os << "^" << z_pow;
            bare = false;
        }
        if (q_pow != 0) {
            if (!bare) os << "*";
            os << "q";
            if (q_pow != 1) os << "^" << q_pow;
            bare = false;
        }
        if (bare) os << "1";
        return os.str();
    }
};

// Arguments of the master sum: parameters alpha and beta, base q^d, width t.
struct SumParams {
    Monomial alpha;
    Monomial beta;
    long d = 1;  // base is q^d
    long t = 1;  // window width

    SumParams() = default;
    SumParams(Monomial a, Monomial b, long d_, long t_) : alpha(a), beta(b), d(d_), t(t_) {}

    // Formal admissibility: every denominator factor must carry a strictly
    // positive q-exponent, i.e. beta.q_pow + d >= 1 whenever beta != 0.
    bool admissible() const {
        if (d < 1 || t < 1) return false;
        if (beta.c != 0 && beta.q_pow + d < 1) return false;
        return true;
    }

    void require_admissible() const {
        if (!admissible())
            throw std::invalid_argument("SumParams: inadmissible parameters (" + str() + ")");
    }

    bool alpha_equals_beta_qd() const { return alpha == beta.shifted_q(d); }

    std::string str() const {
        std::ostringstream os;
        os << "alpha=" << alpha.str() << ", beta=" << beta.str() << ", d=" << d << ", t=" << t;
        return os.str();
    }
};

}  // namespace qpl
