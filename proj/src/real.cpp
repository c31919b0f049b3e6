#include "lue/real.hpp"

#include <cstdio>
#include <cstdlib>

namespace lue {

std::string Real::str(int digits) const {
    if (digits < 2) digits = 2;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

} // namespace lue
