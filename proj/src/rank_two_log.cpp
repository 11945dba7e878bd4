#include "ltswan/rank_two_log.hpp"

#include <stdexcept>

namespace ltswan {

std::strong_ordering cmp_value(const RankTwoLog& a, const RankTwoLog& b) {
    // Bigger -log means smaller value, in both coordinates.
    const int c = cmp(a.flat, b.flat);
    if (c > 0) return std::strong_ordering::less;
    if (c < 0) return std::strong_ordering::greater;
    if (a.sharp > b.sharp) return std::strong_ordering::less;
    if (a.sharp < b.sharp) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

RankTwoLog scale_sharp(const RankTwoLog& v, std::int64_t degree) {
    if (degree < 1) throw std::invalid_argument("scale_sharp: degree must be >= 1");
    return RankTwoLog(v.flat, checked_mul(v.sharp, degree));
}

std::string to_string(const RankTwoLog& v) {
    return "(" + to_string(v.flat) + "," + std::to_string(v.sharp) + ")";
}

}  // namespace ltswan
