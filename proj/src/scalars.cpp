#include "d4/scalars.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace d4 {

std::string rational_to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("malformed rational: " + s);
    q.canonicalize();
    return q;
}

int euler_phi(int n)
{
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace {

using IPoly = std::vector<Integer>;

IPoly ipoly_divexact(IPoly a, const IPoly& b)
{
    // b monic
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    IPoly q(da - db + 1);
    for (int k = da; k >= db; --k) {
        Integer c = a[k];
        q[k - db] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    for (int j = 0; j < db; ++j)
        if (a[j] != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int n)
{
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    // x^n - 1 = prod_{d | n} Phi_d
    IPoly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = ipoly_divexact(p, cyclotomic_polynomial(d));
    return p;
}

namespace {

std::mutex g_field_mutex;
std::map<int, std::unique_ptr<FieldDescriptor>>& field_registry()
{
    static std::map<int, std::unique_ptr<FieldDescriptor>> reg;
    return reg;
}
int g_default_conductor = 12;

}  // namespace

const FieldDescriptor& make_field(int conductor)
{
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto& reg = field_registry();
    auto it = reg.find(conductor);
    if (it != reg.end()) return *it->second;
    auto f = std::make_unique<FieldDescriptor>();
    f->conductor = conductor;
    f->min_poly = cyclotomic_polynomial(conductor);
    f->degree = static_cast<int>(f->min_poly.size()) - 1;
    auto* raw = f.get();
    reg.emplace(conductor, std::move(f));
    return *raw;
}

const FieldDescriptor& default_field() { return make_field(g_default_conductor); }

void set_default_field(int conductor)
{
    make_field(conductor);
    g_default_conductor = conductor;
}

Cyclo::Cyclo(long v)
{
    if (v != 0) c_.emplace_back(v);
}

Cyclo::Cyclo(const Rational& q)
{
    if (q != 0) c_.push_back(q);
}

Cyclo::Cyclo(long p, long q)
{
    if (q == 0) throw std::domain_error("zero denominator");
    if (p != 0) {
        Rational r(p, q);
        r.canonicalize();
        c_.push_back(r);
    }
}

Cyclo Cyclo::zeta(const FieldDescriptor& F, long k)
{
    long N = F.conductor;
    k %= N;
    if (k < 0) k += N;
    Cyclo r;
    r.f_ = &F;
    r.c_.assign(k + 1, Rational(0));
    r.c_[k] = 1;
    r.reduce();
    return r;
}

Cyclo Cyclo::omega(const FieldDescriptor& F)
{
    if (F.conductor % 3 != 0)
        throw FieldError("primitive cube root of unity needs conductor divisible by 3, got " +
                         std::to_string(F.conductor));
    return zeta(F, F.conductor / 3);
}

Cyclo Cyclo::from_coeffs(const FieldDescriptor& F, std::vector<Rational> c)
{
    Cyclo r;
    r.f_ = &F;
    r.c_ = std::move(c);
    r.reduce();
    return r;
}

Rational Cyclo::rational() const
{
    if (!is_rational()) throw FieldError("not a rational number: " + str());
    return c_.empty() ? Rational(0) : c_[0];
}

Rational Cyclo::coeff(int i) const
{
    return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

void Cyclo::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Cyclo::reduce()
{
    trim();
    if (c_.size() <= 1) return;
    if (!f_) throw FieldError("polynomial element without a field");
    const int deg = f_->degree;
    const auto& phi = f_->min_poly;
    for (int k = static_cast<int>(c_.size()) - 1; k >= deg; --k) {
        if (c_[k] == 0) continue;
        Rational c = c_[k];
        for (int j = 0; j < deg; ++j)
            if (phi[j] != 0) c_[k - deg + j] -= c * phi[j];
        c_[k] = 0;
    }
    trim();
}

const FieldDescriptor* Cyclo::join(const Cyclo& a, const Cyclo& b)
{
    if (a.f_ && b.f_ && a.f_ != b.f_)
        throw FieldError("field mismatch: Q(zeta_" + std::to_string(a.f_->conductor) +
                         ") vs Q(zeta_" + std::to_string(b.f_->conductor) + ")");
    return a.f_ ? a.f_ : b.f_;
}

Cyclo& Cyclo::operator+=(const Cyclo& b)
{
    f_ = join(*this, b);
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
    trim();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& b)
{
    f_ = join(*this, b);
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
    trim();
    return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b)
{
    Cyclo r;
    r.f_ = Cyclo::join(a, b);
    if (a.c_.empty() || b.c_.empty()) return r;
    if (a.c_.size() == 1) {
        r.c_.resize(b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = a.c_[0] * b.c_[i];
        return r;
    }
    if (b.c_.size() == 1) {
        r.c_.resize(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] * b.c_[0];
        return r;
    }
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.reduce();
    return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& b) { return *this = *this * b; }
Cyclo& Cyclo::operator/=(const Cyclo& b) { return *this = *this * b.inverse(); }

void Cyclo::sub_mul(const Cyclo& b, const Cyclo& c)
{
    if (b.c_.empty() || c.c_.empty()) return;
    if (b.c_.size() == 1 && c.c_.size() == 1) {
        f_ = join(*this, b);
        f_ = join(*this, c);
        if (c_.empty()) c_.emplace_back(0);
        c_[0] -= b.c_[0] * c.c_[0];
        trim();
        return;
    }
    *this -= b * c;
}

void Cyclo::add_mul(const Cyclo& b, const Cyclo& c)
{
    if (b.c_.empty() || c.c_.empty()) return;
    if (b.c_.size() == 1 && c.c_.size() == 1) {
        f_ = join(*this, b);
        f_ = join(*this, c);
        if (c_.empty()) c_.emplace_back(0);
        c_[0] += b.c_[0] * c.c_[0];
        trim();
        return;
    }
    *this += b * c;
}

Cyclo Cyclo::operator-() const
{
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

namespace {

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// returns (q, r) with a = q*b + r
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b)
{
    qtrim(a);
    int db = static_cast<int>(b.size()) - 1;
    QPoly q;
    if (static_cast<int>(a.size()) - 1 >= db) q.assign(a.size() - db, Rational(0));
    Rational lead_inv = 1 / b.back();
    for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
        if (a[k] == 0) continue;
        Rational c = a[k] * lead_inv;
        q[k - db] = c;
        for (int j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    qtrim(a);
    qtrim(q);
    return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

QPoly qsub(QPoly a, const QPoly& b)
{
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

}  // namespace

Cyclo Cyclo::inverse() const
{
    if (c_.empty()) throw std::domain_error("division by zero");
    if (c_.size() == 1) {
        Cyclo r;
        r.f_ = f_;
        r.c_.push_back(1 / c_[0]);
        return r;
    }
    // extended Euclid: s*a + t*phi = g, g constant since phi irreducible
    QPoly phi(f_->min_poly.begin(), f_->min_poly.end());
    QPoly r0 = phi, r1 = c_;
    QPoly s0, s1{Rational(1)};
    while (!(r1.size() == 1)) {
        if (r1.empty()) throw std::domain_error("non-invertible element");
        auto [q, r] = qdivmod(r0, r1);
        QPoly s2 = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rational g = r1[0];
    for (auto& x : s1) x /= g;
    return from_coeffs(*f_, s1);
}

Cyclo Cyclo::galois(long k) const
{
    if (c_.size() <= 1) return *this;
    long N = f_->conductor;
    k %= N;
    if (k < 0) k += N;
    if (std::gcd(k, N) != 1) throw FieldError("galois exponent not coprime to conductor");
    std::vector<Rational> out(N, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[(i * k) % N] += c_[i];
    return from_coeffs(*f_, std::move(out));
}

Cyclo Cyclo::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    Cyclo r(1), b = *this;
    r.f_ = f_;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string Cyclo::str() const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i == 1) os << "*z";
        if (i > 1) os << "*z^" << i;
    }
    return os.str();
}

std::size_t Cyclo::hash() const
{
    std::size_t h = c_.size();
    for (const auto& x : c_) {
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(x.get_num_mpz_t()));
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(x.get_den_mpz_t()));
    }
    return h;
}

Cyclo arith(const Cyclo& a, const Cyclo& b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    }
    throw std::invalid_argument("bad op");
}

std::ostream& operator<<(std::ostream& os, const Cyclo& a) { return os << a.str(); }

}  // namespace d4
