#include "chered/cyclotomic.hpp"

#include <array>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace chered {

namespace {

// Dense univariate helpers over Q, coefficients low -> high.
using UPoly = std::vector<Rational>;

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Divides a by b in place, returning the quotient; b must be nonzero.
UPoly divmod(UPoly& a, const UPoly& b) {
    UPoly q;
    trim(a);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t d = a.size() - b.size();
        q[d] = c;
        for (size_t i = 0; i < b.size(); ++i) a[i + d] -= c * b[i];
        trim(a);
    }
    return q;
}

UPoly cyclotomic_polynomial(unsigned ell) {
    // Phi_ell = (x^ell - 1) / prod_{d | ell, d < ell} Phi_d
    UPoly num(ell + 1, Rational(0));
    num[0] = -1;
    num[ell] = 1;
    for (unsigned d = 1; d < ell; ++d) {
        if (ell % d != 0) continue;
        UPoly phi_d = cyclotomic_polynomial(d);
        num = divmod(num, phi_d);
    }
    return num;
}

constexpr unsigned kMaxEll = 128;
std::array<std::atomic<const CycloField*>, kMaxEll + 1> g_fields{};
std::mutex g_fields_mutex;

} // namespace

CycloField::CycloField(unsigned ell) : ell_(ell) {
    phi_ = cyclotomic_polynomial(ell);
    degree_ = static_cast<unsigned>(phi_.size() - 1);
    zeta_pow_.resize(ell);
    for (unsigned k = 0; k < ell; ++k) {
        UPoly xk(k + 1, Rational(0));
        xk[k] = 1;
        if (xk.size() > degree_) divmod(xk, phi_);
        xk.resize(degree_, Rational(0));
        zeta_pow_[k] = std::move(xk);
    }
}

const CycloField& CycloField::get(unsigned ell) {
    if (ell == 0 || ell > kMaxEll) throw std::domain_error("cyclotomic order out of range");
    const CycloField* f = g_fields[ell].load(std::memory_order_acquire);
    if (f) return *f;
    std::lock_guard<std::mutex> lock(g_fields_mutex);
    f = g_fields[ell].load(std::memory_order_relaxed);
    if (!f) {
        f = new CycloField(ell);
        g_fields[ell].store(f, std::memory_order_release);
    }
    return *f;
}

const std::vector<Rational>& CycloField::zeta_power(long k) const {
    long r = k % static_cast<long>(ell_);
    if (r < 0) r += ell_;
    return zeta_pow_[static_cast<size_t>(r)];
}

Cyclo::Cyclo(unsigned ell, const Rational& value)
    : ell_(ell), coeff_(CycloField::get(ell).degree()) {
    coeff_[0] = value;
}

Cyclo Cyclo::zeta(unsigned ell, long k) {
    Cyclo z(ell);
    z.coeff_ = CycloField::get(ell).zeta_power(k);
    return z;
}

Cyclo Cyclo::from_poly(unsigned ell, std::vector<Rational> coeffs) {
    const CycloField& f = CycloField::get(ell);
    UPoly a = std::move(coeffs);
    if (a.size() > f.degree()) divmod(a, f.phi());
    a.resize(f.degree(), Rational(0));
    Cyclo z(ell);
    z.coeff_ = std::move(a);
    return z;
}

bool Cyclo::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return false;
    return true;
}

Cyclo Cyclo::operator-() const {
    Cyclo r(*this);
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    const CycloField& f = CycloField::get(a.ell_);
    const size_t d = f.degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (a.coeff_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (b.coeff_[j] == 0) continue;
            prod[i + j] += a.coeff_[i] * b.coeff_[j];
        }
    }
    return Cyclo::from_poly(a.ell_, std::move(prod));
}

Cyclo& Cyclo::operator*=(const Rational& r) {
    for (auto& c : coeff_) c *= r;
    return *this;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic scalar");
    if (is_rational()) {
        Cyclo r(ell_);
        r.coeff_[0] = Rational(1) / coeff_[0];
        return r;
    }
    // Extended Euclid on (phi, a): maintain r = t * a (mod phi).
    const CycloField& f = CycloField::get(ell_);
    UPoly r0 = f.phi();
    UPoly r1 = coeff_;
    trim(r1);
    UPoly t0, t1{Rational(1)};
    while (!r1.empty()) {
        UPoly rem = r0;
        UPoly q = divmod(rem, r1);
        UPoly tn = t0;
        tn.resize(std::max(tn.size(), q.size() + t1.size()), Rational(0));
        for (size_t d = 0; d < q.size(); ++d) {
            if (q[d] == 0) continue;
            for (size_t i = 0; i < t1.size(); ++i) tn[i + d] -= q[d] * t1[i];
        }
        trim(tn);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (r0.size() != 1) throw std::domain_error("non-invertible cyclotomic scalar");
    for (auto& c : t0) c /= r0[0];
    return Cyclo::from_poly(ell_, std::move(t0));
}

bool Cyclo::operator<(const Cyclo& o) const {
    if (ell_ != o.ell_) return ell_ < o.ell_;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] != o.coeff_[i]) return coeff_[i] < o.coeff_[i];
    }
    return false;
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        const Rational& c = coeff_[i];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace chered
