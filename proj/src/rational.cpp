#include "atdm/rational.hpp"

#include "atdm/errors.hpp"

namespace atdm {

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("rational: zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("rational: malformed value '" + s + "'");
    }
}

}  // namespace atdm
