#include "ffl/report.hpp"

#include <charconv>

namespace ffl {

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string scan_csv(const std::vector<MomentResult>& rows) {
    std::string out = "q,g,k,beta,t,family_size,moment,rhs,rel_error,regime\n";
    for (const auto& r : rows) {
        out += std::to_string(r.q) + "," + std::to_string(r.g) + "," + fmt_double(r.shift.k) + "," +
               fmt_double(r.shift.beta) + "," + fmt_double(r.shift.t) + "," + r.family_size.str() +
               "," + fmt_double(r.moment) + "," + fmt_double(r.rhs_prediction) + "," +
               fmt_double(r.rel_error) + "," + to_string(r.regime) + "\n";
    }
    return out;
}

}  // namespace ffl
