#pragma once
#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace g2pc {

// Dense polynomial in q over Q, coefficients low to high, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> c);
    static QPoly constant(const mpq_class& a);
    static QPoly monomial(const mpq_class& a, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int valuation() const;  // lowest nonzero degree
    const mpq_class& coeff(int d) const;
    const mpq_class& lead() const { return c_.back(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly scaled(const mpq_class& a) const;
    QPoly shifted_down(int k) const;  // divide by q^k; caller guarantees exactness
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
    bool operator==(const QPoly&) const = default;

    static QPoly gcd(QPoly a, QPoly b);  // monic
    std::string str() const;

private:
    std::vector<mpq_class> c_;
    void trim();
};

// Element of Q(q), stored as q^e * n / d with n(0), d(0) nonzero, gcd(n,d) = 1
// and d monic.  Zero is n = 0, e = 0, d = 1.  The representation is canonical.
class QRat {
public:
    QRat() : d_(QPoly::constant(1)) {}
    QRat(long v);  // NOLINT(implicit)
    explicit QRat(const mpq_class& v);
    QRat(const QPoly& n, const QPoly& d, int e = 0);

    static QRat q(int e = 1);

    bool is_zero() const { return n_.is_zero(); }
    // Order of vanishing at q = 0 (meaningless for zero).
    int valuation() const { return e_; }
    // Value of q^-valuation * this at q = 0.
    mpq_class leading() const;

    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator-() const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }
    QRat inverse() const;
    QRat pow(int k) const;
    bool operator==(const QRat& o) const { return e_ == o.e_ && n_ == o.n_ && d_ == o.d_; }

    // Human-readable form such as "(q^6+1)/(q^3)"; "0" and "1" for trivial values.
    std::string str() const;

private:
    int e_ = 0;
    QPoly n_, d_;
    void normalize();
};

// q_i = q^{(alpha_i, alpha_i)}: q^3 for i = 0,1 and q for i = 2.
QRat q_i(int i);
QRat qint(int m, int i);   // [m]_i
QRat qfact(int m, int i);  // [m]_i!
QRat qbinom(int m, int k, int i);

// Laurent polynomial in two commuting variables over Q(q).
class XY {
public:
    using Exp = std::pair<int, int>;
    XY() = default;
    XY(const QRat& c);  // NOLINT(implicit)
    XY(long c) : XY(QRat(c)) {}  // NOLINT(implicit)
    static XY mono(const QRat& c, int a, int b);
    static XY x(int a = 1) { return mono(1, a, 0); }
    static XY y(int b = 1) { return mono(1, 0, b); }

    bool is_zero() const { return t_.empty(); }
    const std::map<Exp, QRat>& terms() const { return t_; }
    QRat coeff(int a, int b) const;

    XY operator+(const XY& o) const;
    XY operator-(const XY& o) const;
    XY operator-() const;
    XY operator*(const XY& o) const;
    XY& operator+=(const XY& o);
    XY& operator*=(const XY& o) { return *this = *this * o; }
    bool operator==(const XY&) const = default;

    XY swapped() const;      // x <-> y
    XY subs_x_zy() const;    // x -> z*y, result in variables (z, y)
    QRat eval_first(const QRat& v) const;  // substitute the first variable; all second exponents must vanish

    std::string str(const char* vx = "x", const char* vy = "y") const;

private:
    std::map<Exp, QRat> t_;
};

// Dense linear algebra over Q(q).
using QMatrix = std::vector<std::vector<QRat>>;
// Row-reduce in place; returns pivot columns.
std::vector<int> row_reduce(QMatrix& m);
// Basis of the right nullspace.
std::vector<std::vector<QRat>> nullspace(QMatrix m, int cols);

}  // namespace g2pc
