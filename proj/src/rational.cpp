#include "ncvx/rational.hpp"

#include "ncvx/error.hpp"

#include <cctype>

namespace ncvx {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw InputError("BadRational", "empty rational literal");
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            throw InputError("BadRational", "bad character in rational literal '" + s + "'");
    }
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InputError("BadRational", "cannot parse rational literal '" + s + "'");
    }
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_decimal(const Rat& r, int digits) {
    // integer long division; deterministic across platforms
    mpz_class num = r.get_num();
    mpz_class den = r.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class scaled = (num * scale + den / 2) / den; // round half up
    mpz_class ip = scaled / scale;
    mpz_class fp = scaled % scale;
    std::string frac = fp.get_str();
    while (static_cast<int>(frac.size()) < digits) frac.insert(frac.begin(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (!frac.empty()) out += "." + frac;
    return out;
}

} // namespace ncvx
