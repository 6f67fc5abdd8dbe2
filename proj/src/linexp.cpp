#include "atdm/linexp.hpp"

namespace atdm {

std::string LinExp::str() const {
    if (b == 0) return to_string(a);
    std::string bs;
    if (b == 1) {
        bs = "B";
    } else if (b == -1) {
        bs = "-B";
    } else {
        bs = to_string(b) + "*B";
    }
    if (a == 0) return bs;
    if (b > 0) return to_string(a) + "+" + bs;
    return to_string(a) + bs;  // negative b renders its own sign
}

}  // namespace atdm
