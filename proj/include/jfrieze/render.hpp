#ifndef JFRIEZE_RENDER_HPP
#define JFRIEZE_RENDER_HPP

// ASCII diamond-strip rendering.
//
// Row d of the picture holds the entries C_{b+d,b}; entry (a,b) is drawn in
// horizontal slot a + b, so each row is offset by half a cell from the rows
// next to it.  Diagonal entries carry the marker G, entries on the boundary
// a = pi(b) carry B.  Entries forced to vanish inside the band are left blank.

#include "jfrieze/frieze.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace jfrieze {

inline std::string render_ascii(const PeriodicFrieze& C, long periods = 2) {
    const auto& pi = C.shape();
    long n = C.period();
    long span = std::max<long>(1, periods) * n;
    long depth = 0;
    for (long b = 1; b <= n; ++b) depth = std::max(depth, pi(b) - b);

    auto cell = [&](long a, long b) -> std::string {
        Rational v = C.entry(a, b);
        auto rule = prefrieze_rule(pi, a, b);
        if (rule.kind == PrefriezeRule::fixed && rule.value == 0 && v == 0) return "";
        std::string mark = a == b ? "G" : (a == pi(b) ? "B" : "");
        return mark + to_string(v);
    };

    std::size_t width = 1;
    for (long b = 1; b <= span; ++b)
        for (long a = b; a <= pi(b); ++a) width = std::max(width, cell(a, b).size());
    width += 1;

    std::ostringstream out;
    for (long d = 0; d <= depth; ++d) {
        std::string line;
        for (long x = 2; x <= 2 * span + depth; ++x) {
            std::string text;
            if ((x - d) % 2 == 0) {
                long b = (x - d) / 2;
                if (b >= 1 && b <= span && b + d <= pi(b)) text = cell(b + d, b);
            }
            line += std::string(width - text.size(), ' ') + text;
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
    }
    return out.str();
}

}  // namespace jfrieze

#endif
