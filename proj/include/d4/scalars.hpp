/** @file scalars.hpp
 *  @brief Exact rationals and elements of cyclotomic fields Q(zeta_N).
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace d4 {

using Integer = mpz_class;
using Rational = mpq_class;

std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& s);

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Q(zeta_N) presented as Q[x]/Phi_N(x).
struct FieldDescriptor {
    int conductor = 1;
    int degree = 1;
    std::vector<Integer> min_poly;  ///< Phi_N, low to high, monic
};

std::vector<Integer> cyclotomic_polynomial(int n);
int euler_phi(int n);

/// Interned: the same conductor always returns the same descriptor.
const FieldDescriptor& make_field(int conductor);
const FieldDescriptor& default_field();
void set_default_field(int conductor);

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
/// Rationals carry no field and combine with any field element.
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(long v);
    Cyclo(int v) : Cyclo(static_cast<long>(v)) {}
    Cyclo(const Rational& q);
    Cyclo(long p, long q);

    static Cyclo zeta(const FieldDescriptor& F, long k = 1);
    static Cyclo omega(const FieldDescriptor& F);
    static Cyclo from_coeffs(const FieldDescriptor& F, std::vector<Rational> c);

    const FieldDescriptor* field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_rational() const { return c_.size() <= 1; }
    Rational rational() const;
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Cyclo& operator+=(const Cyclo& b);
    Cyclo& operator-=(const Cyclo& b);
    Cyclo& operator*=(const Cyclo& b);
    Cyclo& operator/=(const Cyclo& b);
    Cyclo operator-() const;

    Cyclo inverse() const;
    Cyclo galois(long k) const;
    Cyclo pow(long e) const;

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    /// a -= b*c without temporaries when possible.
    void sub_mul(const Cyclo& b, const Cyclo& c);
    void add_mul(const Cyclo& b, const Cyclo& c);

    std::string str() const;
    std::size_t hash() const;

private:
    const FieldDescriptor* f_ = nullptr;
    std::vector<Rational> c_;  ///< trimmed: no trailing zeros

    void trim();
    void reduce();
    static const FieldDescriptor* join(const Cyclo& a, const Cyclo& b);
};

using Scalar = Cyclo;

enum class ArithOp { Add, Sub, Mul, Div };
Cyclo arith(const Cyclo& a, const Cyclo& b, ArithOp op);
inline Cyclo galois(const Cyclo& a, long k) { return a.galois(k); }

std::ostream& operator<<(std::ostream& os, const Cyclo& a);

}  // namespace d4
