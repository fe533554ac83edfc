#include "matspace/fp.hpp"

#include <utility>

namespace matspace::la {

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Fp Fp::inv() const {
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    // extended Euclid on (v, p); p prime so the inverse exists
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_);
}

Fp Fp::Field::from_long(long n) const {
    const auto m = static_cast<std::int64_t>(p);
    std::int64_t r = n % m;
    if (r < 0) r += m;
    return Fp(static_cast<std::uint64_t>(r), p);
}

Fp Fp::Field::parse(const std::string& s) const {
    // "k" or "k mod q"
    std::string value_tok = s;
    const auto mod_pos = s.find(" mod ");
    if (mod_pos != std::string::npos) {
        value_tok = s.substr(0, mod_pos);
        const std::string mod_tok = s.substr(mod_pos + 5);
        std::uint64_t q = 0;
        try {
            q = std::stoull(mod_tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid prime-field literal \"" + s + "\"");
        }
        if (q != p)
            throw std::invalid_argument("modulus mismatch in \"" + s + "\": field is mod " +
                                        std::to_string(p));
    }
    if (value_tok.empty())
        throw std::invalid_argument("invalid prime-field literal \"" + s + "\"");
    std::size_t i = (value_tok[0] == '-') ? 1 : 0;
    if (i == value_tok.size())
        throw std::invalid_argument("invalid prime-field literal \"" + s + "\"");
    for (; i < value_tok.size(); ++i)
        if (value_tok[i] < '0' || value_tok[i] > '9')
            throw std::invalid_argument("invalid prime-field literal \"" + s + "\"");
    long long v = 0;
    try {
        v = std::stoll(value_tok);
    } catch (const std::exception&) {
        throw std::invalid_argument("prime-field literal out of range \"" + s + "\"");
    }
    return from_long(static_cast<long>(v));
}

} // namespace matspace::la
