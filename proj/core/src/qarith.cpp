#include "g2pc/qarith.hpp"

#include <sstream>
#include <stdexcept>

namespace g2pc {

// ---- QPoly ----

QPoly::QPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }

QPoly QPoly::constant(const mpq_class& a) { return QPoly(std::vector<mpq_class>{a}); }

QPoly QPoly::monomial(const mpq_class& a, int deg) {
    std::vector<mpq_class> c(deg + 1);
    c[deg] = a;
    return QPoly(std::move(c));
}

void QPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int QPoly::valuation() const {
    for (int k = 0; k < static_cast<int>(c_.size()); ++k)
        if (sgn(c_[k]) != 0) return k;
    return 0;
}

const mpq_class& QPoly::coeff(int d) const {
    static const mpq_class zero(0);
    return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : zero;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (sgn(c_[a]) == 0) continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::scaled(const mpq_class& a) const {
    QPoly r = *this;
    for (auto& v : r.c_) v *= a;
    r.trim();
    return r;
}

QPoly QPoly::shifted_down(int k) const {
    if (k <= 0) return *this;
    return QPoly(std::vector<mpq_class>(c_.begin() + std::min<std::size_t>(k, c_.size()), c_.end()));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<mpq_class> rem = c_;
    const int dd = d.degree();
    std::vector<mpq_class> quo(std::max(0, degree() - dd + 1));
    const mpq_class inv = 1 / d.lead();
    for (int k = degree(); k >= dd; --k) {
        if (sgn(rem[k]) == 0) continue;
        const mpq_class f = rem[k] * inv;
        quo[k - dd] = f;
        for (int s = 0; s <= dd; ++s) rem[k - dd + s] -= f * d.c_[s];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(1 / a.lead());
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpq_class& v = c_[k];
        if (sgn(v) == 0) continue;
        const bool neg = sgn(v) < 0;
        const mpq_class a = abs(v);
        if (!first) os << (neg ? "-" : "+");
        else if (neg) os << "-";
        first = false;
        const bool unit = a == 1;
        if (!unit || k == 0) os << a.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

// ---- QRat ----

QRat::QRat(long v) : n_(QPoly::constant(v)), d_(QPoly::constant(1)) { normalize(); }
QRat::QRat(const mpq_class& v) : n_(QPoly::constant(v)), d_(QPoly::constant(1)) { normalize(); }
QRat::QRat(const QPoly& n, const QPoly& d, int e) : e_(e), n_(n), d_(d) {
    if (d.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

QRat QRat::q(int e) {
    QRat r(1);
    r.e_ = e;
    return r;
}

void QRat::normalize() {
    if (n_.is_zero()) {
        e_ = 0;
        d_ = QPoly::constant(1);
        return;
    }
    const int vn = n_.valuation(), vd = d_.valuation();
    n_ = n_.shifted_down(vn);
    d_ = d_.shifted_down(vd);
    e_ += vn - vd;
    if (d_.degree() > 0) {
        const QPoly g = QPoly::gcd(n_, d_);
        if (g.degree() > 0) {
            n_ = n_.divmod(g).first;
            d_ = d_.divmod(g).first;
        }
    }
    const mpq_class l = d_.lead();
    if (l != 1) {
        n_ = n_.scaled(1 / l);
        d_ = d_.scaled(1 / l);
    }
}

mpq_class QRat::leading() const {
    if (is_zero()) return 0;
    return n_.coeff(0) / d_.coeff(0);
}

QRat QRat::operator+(const QRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // align the q-powers: q^e1 n1/d1 + q^e2 n2/d2 = q^m (q^(e1-m) n1 d2 + q^(e2-m) n2 d1) / (d1 d2)
    const int m = std::min(e_, o.e_);
    QRat r;
    if (d_ == o.d_) {
        r.n_ = QPoly::monomial(1, e_ - m) * n_ + QPoly::monomial(1, o.e_ - m) * o.n_;
        r.d_ = d_;
    } else {
        r.n_ = QPoly::monomial(1, e_ - m) * n_ * o.d_ + QPoly::monomial(1, o.e_ - m) * o.n_ * d_;
        r.d_ = d_ * o.d_;
    }
    r.e_ = m;
    r.normalize();
    return r;
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.n_ = -r.n_;
    return r;
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const {
    if (is_zero() || o.is_zero()) return {};
    QRat r;
    r.e_ = e_ + o.e_;
    // cross-cancel before multiplying keeps the gcd small
    const QPoly g1 = d_.degree() > 0 && o.n_.degree() > 0 ? QPoly::gcd(o.n_, d_) : QPoly::constant(1);
    const QPoly g2 = o.d_.degree() > 0 && n_.degree() > 0 ? QPoly::gcd(n_, o.d_) : QPoly::constant(1);
    const QPoly a = g2.degree() > 0 ? n_.divmod(g2).first : n_;
    const QPoly b = g1.degree() > 0 ? o.n_.divmod(g1).first : o.n_;
    const QPoly c = g1.degree() > 0 ? d_.divmod(g1).first : d_;
    const QPoly d = g2.degree() > 0 ? o.d_.divmod(g2).first : o.d_;
    r.n_ = a * b;
    r.d_ = c * d;
    const mpq_class l = r.d_.lead();
    if (l != 1) {
        r.n_ = r.n_.scaled(1 / l);
        r.d_ = r.d_.scaled(1 / l);
    }
    return r;
}

QRat QRat::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(q)");
    return QRat(d_, n_, -e_);
}

QRat QRat::operator/(const QRat& o) const { return *this * o.inverse(); }

QRat QRat::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    QRat r(1), b = *this;
    for (; k; k >>= 1, b = b * b)
        if (k & 1) r = r * b;
    return r;
}

std::string QRat::str() const {
    if (is_zero()) return "0";
    const bool dconst = d_.degree() == 0;
    QPoly num = n_ * (e_ > 0 ? QPoly::monomial(1, e_) : QPoly::constant(1));
    QPoly den = d_ * (e_ < 0 ? QPoly::monomial(1, -e_) : QPoly::constant(1));
    // move a rational constant of the numerator out so that integer forms print
    if (dconst && den.degree() == 0) return num.degree() == 0 ? num.coeff(0).get_str() : "(" + num.str() + ")";
    return "(" + num.str() + ")/(" + den.str() + ")";
}

QRat q_i(int i) { return QRat::q(i == 2 ? 1 : 3); }

QRat qint(int m, int i) {
    // [m]_i = sum_{k=0}^{m-1} q_i^{m-1-2k}
    const int s = i == 2 ? 1 : 3;
    QRat r;
    for (int k = 0; k < m; ++k) r += QRat::q(s * (m - 1 - 2 * k));
    return r;
}

QRat qfact(int m, int i) {
    QRat r(1);
    for (int k = 2; k <= m; ++k) r *= qint(k, i);
    return r;
}

QRat qbinom(int m, int k, int i) {
    if (k < 0 || k > m) return {};
    return qfact(m, i) / (qfact(k, i) * qfact(m - k, i));
}

// ---- XY ----

XY::XY(const QRat& c) {
    if (!c.is_zero()) t_.emplace(Exp{0, 0}, c);
}

XY XY::mono(const QRat& c, int a, int b) {
    XY r;
    if (!c.is_zero()) r.t_.emplace(Exp{a, b}, c);
    return r;
}

QRat XY::coeff(int a, int b) const {
    auto it = t_.find({a, b});
    return it == t_.end() ? QRat() : it->second;
}

XY& XY::operator+=(const XY& o) {
    for (const auto& [e, c] : o.t_) {
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

XY XY::operator+(const XY& o) const {
    XY r = *this;
    r += o;
    return r;
}

XY XY::operator-() const {
    XY r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

XY XY::operator-(const XY& o) const { return *this + (-o); }

XY XY::operator*(const XY& o) const {
    XY r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) r += mono(c1 * c2, e1.first + e2.first, e1.second + e2.second);
    return r;
}

XY XY::swapped() const {
    XY r;
    for (const auto& [e, c] : t_) r.t_.emplace(Exp{e.second, e.first}, c);
    return r;
}

XY XY::subs_x_zy() const {
    XY r;
    for (const auto& [e, c] : t_) r += mono(c, e.first, e.first + e.second);
    return r;
}

QRat XY::eval_first(const QRat& v) const {
    QRat r;
    for (const auto& [e, c] : t_) {
        if (e.second != 0) throw std::domain_error("eval_first: second variable present");
        r += c * v.pow(e.first);
    }
    return r;
}

std::string XY::str(const char* vx, const char* vy) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << c.str();
        auto var = [&](const char* v, int k) {
            if (k == 0) return;
            os << "*" << v;
            if (k != 1) os << "^" << k;
        };
        var(vx, e.first);
        var(vy, e.second);
    }
    return os.str();
}

// ---- linear algebra ----

std::vector<int> row_reduce(QMatrix& m) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const QRat inv = m[r][c].inverse();
        for (auto& v : m[r]) v *= inv;
        for (int s = 0; s < rows; ++s) {
            if (s == r || m[s][c].is_zero()) continue;
            const QRat f = m[s][c];
            for (int k = c; k < cols; ++k)
                if (!m[r][k].is_zero()) m[s][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<QRat>> nullspace(QMatrix m, int cols) {
    for (auto& row : m) row.resize(cols);
    const auto piv = row_reduce(m);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<QRat>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<QRat> v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace g2pc
