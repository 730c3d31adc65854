#include "cake/rational.hpp"

#include <cstdio>

namespace cake {

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw domain_error("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw domain_error("malformed rational: '" + s + "'");
    if (q.get_den() == 0) throw domain_error("zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    return q_.get_str();
}

std::string Rat::decimal() const {
    mpf_class f(q_, 128);
    char buf[64];
    gmp_snprintf(buf, sizeof buf, "%.15Fg", f.get_mpf_t());
    return buf;
}

} // namespace cake
