#include "matspace/binary_form.hpp"

#include <algorithm>

namespace matspace::poly {

using la::Rat;

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat());
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rat& s) const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= s;
    return UPoly(std::move(r));
}

UPoly UPoly::rem(const UPoly& o) const {
    if (o.is_zero()) throw std::domain_error("UPoly: remainder by zero");
    UPoly r = *this;
    const Rat lead_inv = o.leading().inv();
    while (!r.is_zero() && r.degree() >= o.degree()) {
        const Rat q = r.leading() * lead_inv;
        const std::size_t shift = static_cast<std::size_t>(r.degree() - o.degree());
        for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i + shift] -= q * o.c_[i];
        r.trim();
    }
    return r;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inv()); // monic
}

namespace {

// divisors of |n|, by trial division; throws past the iteration budget
std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    if (n == 0) throw std::domain_error("divisors_of: zero");
    std::vector<mpz_class> lo, hi;
    mpz_class d = 1;
    std::uint64_t steps = 0;
    for (; d * d <= n; ++d) {
        if (++steps > 50'000'000ULL)
            throw BudgetExceeded("rational-root search: divisor enumeration budget exceeded");
        if (n % d == 0) {
            lo.push_back(d);
            if (d * d != n) hi.push_back(n / d);
        }
    }
    for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
    return lo;
}

} // namespace

std::vector<Rat> UPoly::rational_roots() const {
    std::vector<Rat> roots;
    if (is_zero() || degree() == 0) return roots;

    // clear denominators to a primitive integer polynomial
    mpz_class den_lcm = 1;
    for (const auto& c : c_) {
        mpz_class d = c.denominator();
        den_lcm = den_lcm / ::gcd(den_lcm, d) * d;
    }
    std::vector<mpz_class> ic(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        ic[i] = c_[i].numerator() * (den_lcm / c_[i].denominator());

    // strip x^k: 0 is a root when the constant term vanishes
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    if (low + 1 >= ic.size()) return roots;

    const mpz_class a0 = ic[low];
    const mpz_class an = ic.back();
    const auto ps = divisors_of(a0);
    const auto qs = divisors_of(an);
    for (const auto& p : ps)
        for (const auto& q : qs) {
            for (int sign = +1; sign >= -1; sign -= 2) {
                mpq_class cand(sign > 0 ? p : mpz_class(-p), q);
                cand.canonicalize();
                Rat x{mpq_class(cand)};
                if (eval(x).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), x) == roots.end())
                        roots.push_back(x);
                }
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// BinaryForm

BinaryForm::BinaryForm(std::vector<Rat> coeffs) {
    const bool all_zero =
        std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c.is_zero(); });
    if (all_zero) return;
    deg_ = static_cast<int>(coeffs.size()) - 1;
    c_ = std::move(coeffs);
}

BinaryForm BinaryForm::from_mpoly(const MPoly<Rat>& p) {
    if (p.nvars() != 2) throw std::invalid_argument("BinaryForm: needs a 2-variable polynomial");
    if (p.is_zero()) return BinaryForm();
    if (!p.is_homogeneous()) throw std::invalid_argument("BinaryForm: polynomial not homogeneous");
    const auto deg = p.total_degree();
    std::vector<Rat> c(deg + 1, Rat());
    for (const auto& [e, coeff] : p.terms()) c[e[1]] = coeff;
    return BinaryForm(std::move(c));
}

Rat BinaryForm::eval(const Rat& s, const Rat& t) const {
    Rat acc;
    for (int i = 0; i <= deg_; ++i) {
        Rat term = c_[static_cast<std::size_t>(i)];
        for (int k = 0; k < deg_ - i; ++k) term *= s;
        for (int k = 0; k < i; ++k) term *= t;
        acc += term;
    }
    return acc;
}

BinaryForm BinaryForm::normalized() const {
    if (is_zero()) return *this;
    for (const auto& c : c_)
        if (!c.is_zero()) {
            BinaryForm r = *this;
            const Rat inv = c.inv();
            for (auto& x : r.c_) x *= inv;
            return r;
        }
    return *this;
}

BinaryForm BinaryForm::gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();

    // split off s^alpha t^beta, gcd the dehomogenized parts, re-homogenize
    auto split = [](const BinaryForm& f) {
        int lo = 0, hi = f.deg_;
        while (f.c_[static_cast<std::size_t>(lo)].is_zero()) ++lo;
        while (f.c_[static_cast<std::size_t>(hi)].is_zero()) --hi;
        // s-exponent of the monomial factor is deg-hi, t-exponent is lo
        std::vector<Rat> core(f.c_.begin() + lo, f.c_.begin() + hi + 1);
        return std::tuple<int, int, UPoly>{f.deg_ - hi, lo, UPoly(std::move(core))};
    };
    auto [sa, ta, pa] = split(a);
    auto [sb, tb, pb] = split(b);
    const UPoly g = UPoly::gcd(pa, pb);

    const int s_exp = std::min(sa, sb);
    const int t_exp = std::min(ta, tb);
    const int deg = s_exp + t_exp + g.degree();
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1, Rat());
    for (int i = 0; i <= g.degree(); ++i)
        c[static_cast<std::size_t>(t_exp + i)] = g.coeffs()[static_cast<std::size_t>(i)];
    return BinaryForm(std::move(c)).normalized();
}

std::vector<std::pair<Rat, Rat>> BinaryForm::rational_roots() const {
    std::vector<std::pair<Rat, Rat>> roots;
    if (is_zero() || deg_ <= 0) return roots;
    int lo = 0, hi = deg_;
    while (c_[static_cast<std::size_t>(lo)].is_zero()) ++lo;
    while (c_[static_cast<std::size_t>(hi)].is_zero()) --hi;
    // f(1,0) is the s^deg coefficient c_[0]; f(0,1) is c_[deg]
    if (c_[0].is_zero()) roots.emplace_back(Rat(1), Rat(0));
    if (c_[static_cast<std::size_t>(deg_)].is_zero()) roots.emplace_back(Rat(0), Rat(1));
    std::vector<Rat> core(c_.begin() + lo, c_.begin() + hi + 1);
    UPoly p(std::move(core));
    for (const auto& x : p.rational_roots())
        if (!x.is_zero()) roots.emplace_back(Rat(1), x);
    return roots;
}

std::string BinaryForm::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= deg_; ++i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string mono;
        const int se = deg_ - i, te = i;
        if (se > 0) mono += "s" + (se > 1 ? "^" + std::to_string(se) : "");
        if (te > 0) {
            if (!mono.empty()) mono += "*";
            mono += "t" + (te > 1 ? "^" + std::to_string(te) : "");
        }
        if (mono.empty())
            out += c.str();
        else if (c.is_one())
            out += mono;
        else
            out += "(" + c.str() + ")*" + mono;
    }
    return out;
}

} // namespace matspace::poly
