#include "artifact/rational.hpp"

#include "artifact/errors.hpp"

#include <mutex>

namespace artifact {

std::string to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

Rat parse_rat(const std::string& text) {
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw ParamError("malformed rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    Int d(den);
    if (d == 0) throw ParamError("zero denominator in '" + text + "'");
    Rat q(Int(num), d);
    q.canonicalize();
    return q;
}

Int factorial(unsigned k) {
    static std::mutex mu;
    static std::vector<Int> table{Int(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= k) table.push_back(table.back() * static_cast<unsigned long>(table.size()));
    return table[k];
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Int lcm_of_denominators(const std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

}  // namespace artifact
