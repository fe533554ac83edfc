#include "matspace/rat.hpp"

namespace matspace::la {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Rat::Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    const auto slash = s.find('/');
    const std::string num_tok = (slash == std::string::npos) ? s : s.substr(0, slash);
    if (!is_integer_token(num_tok))
        throw std::invalid_argument("invalid rational literal \"" + s + "\"");
    mpz_class num(num_tok);
    mpz_class den(1);
    if (slash != std::string::npos) {
        const std::string den_tok = s.substr(slash + 1);
        if (!is_integer_token(den_tok))
            throw std::invalid_argument("invalid rational literal \"" + s + "\"");
        den = mpz_class(den_tok);
        if (den == 0)
            throw std::invalid_argument("invalid rational literal \"" + s + "\": zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(std::move(q));
}

Rat Rat::Field::parse(const std::string& s) const { return Rat::parse(s); }

} // namespace matspace::la
