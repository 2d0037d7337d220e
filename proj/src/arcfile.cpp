#include "arcfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pgarc {

namespace {

// Parses an unsigned decimal number at s[pos...], advancing pos. Returns
// false when no digits are present or the value overflows 64 bits.
bool take_number(const std::string& s, size_t& pos, uint64_t& out) {
    const char* b = s.data() + pos;
    const char* e = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(b, e, out);
    if (ec != std::errc() || ptr == b) return false;
    pos += static_cast<size_t>(ptr - b);
    return true;
}

bool take_literal(const std::string& s, size_t& pos, const char* lit) {
    size_t n = std::char_traits<char>::length(lit);
    if (s.compare(pos, n, lit) != 0) return false;
    pos += n;
    return true;
}

}  // namespace

std::string poly_digits(const Field& f) {
    std::string out;
    bool dotted = f.p() > 9;
    for (size_t i = 0; i < f.modulus().size(); ++i) {
        if (dotted && i) out += '.';
        out += std::to_string(f.modulus()[i]);
    }
    return out;
}

std::string arc_file_text(const Field& f, const std::vector<Point>& pts,
                          char kind, int64_t param,
                          std::optional<bool> complete) {
    std::ostringstream os;
    os << "q=" << f.p() << '^' << f.h() << " k=" << pts.size()
       << " poly=" << poly_digits(f) << '\n';
    if (kind) os << "# kind=" << kind << " param=" << param << '\n';
    for (const Point& P : pts) os << point_text(P) << '\n';
    if (complete) os << "complete=" << (*complete ? "true" : "false") << '\n';
    return os.str();
}

void write_arc_file(const std::string& path, const Field& f,
                    const std::vector<Point>& pts, char kind, int64_t param,
                    std::optional<bool> complete) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << arc_file_text(f, pts, kind, param, complete);
    if (!os.flush()) throw std::runtime_error("write failed: " + path);
}

ArcFileContents read_arc_file(std::istream& in) {
    ArcFileContents a;
    std::string s;
    uint32_t ln = 0;

    auto fail = [&](const std::string& msg) -> ArcFileError {
        return ArcFileError(ln, msg);
    };

    ++ln;
    if (!std::getline(in, s)) throw fail("missing header");
    {
        size_t pos = 0;
        uint64_t p = 0, h = 0, k = 0;
        if (!take_literal(s, pos, "q=") || !take_number(s, pos, p) ||
            !take_literal(s, pos, "^") || !take_number(s, pos, h) ||
            !take_literal(s, pos, " k=") || !take_number(s, pos, k) ||
            !take_literal(s, pos, " poly="))
            throw fail("header must be q=<p>^<h> k=<size> poly=<digits>");
        std::string poly = s.substr(pos);
        if (p < 2 || h < 1) throw fail("field description out of range");
        uint64_t q = 1;
        for (uint64_t i = 0; i < h; ++i) {
            q *= p;
            if (q > Field::kMaxOrder) throw fail("q exceeds the supported range");
        }
        if (k > q + 2) throw fail("size exceeds the largest arc in PG(2,q)");
        if (poly.empty()) throw fail("empty modulus digits");

        // The modulus must list h+1 base-p digits, highest one 1 (monic).
        std::vector<uint32_t> digits;
        if (p > 9) {
            size_t dp = 0;
            while (true) {
                uint64_t d = 0;
                if (!take_number(poly, dp, d)) throw fail("bad modulus digit");
                digits.push_back(static_cast<uint32_t>(d));
                if (dp == poly.size()) break;
                if (poly[dp] != '.') throw fail("bad modulus digit separator");
                ++dp;
            }
        } else {
            for (char c : poly) {
                if (c < '0' || c > '9') throw fail("bad modulus digit");
                digits.push_back(static_cast<uint32_t>(c - '0'));
            }
        }
        if (digits.size() != h + 1)
            throw fail("modulus must have degree h");
        for (uint32_t d : digits)
            if (d >= p) throw fail("modulus digit not below p");
        if (digits.back() != 1) throw fail("modulus must be monic");

        a.p = static_cast<uint32_t>(p);
        a.h = static_cast<uint32_t>(h);
        a.q = static_cast<uint32_t>(q);
        a.k = static_cast<uint32_t>(k);
        a.poly = std::move(poly);
    }

    bool saw_complete = false;
    while (std::getline(in, s)) {
        ++ln;
        if (saw_complete) throw fail("content after the completeness line");
        if (s.empty()) throw fail("blank line");
        if (s[0] == '#') {
            size_t pos = 0;
            uint64_t param = 0;
            if (take_literal(s, pos, "# kind=") && pos < s.size()) {
                char kind = s[pos++];
                if (take_literal(s, pos, " param=") &&
                    take_number(s, pos, param) && pos == s.size()) {
                    a.kind = kind;
                    a.param = static_cast<int64_t>(param);
                }
            }
            continue;
        }
        if (s == "complete=true" || s == "complete=false") {
            if (a.points.size() != a.k)
                throw fail("completeness line before all " +
                           std::to_string(a.k) + " points");
            a.complete = s == "complete=true";
            saw_complete = true;
            continue;
        }
        size_t pos = 0;
        uint64_t x0 = 0, x1 = 0, x2 = 0;
        if (!take_number(s, pos, x0) || !take_literal(s, pos, ":") ||
            !take_number(s, pos, x1) || !take_literal(s, pos, ":") ||
            !take_number(s, pos, x2) || pos != s.size())
            throw fail("expected a point as x0:x1:x2");
        if (x0 >= a.q || x1 >= a.q || x2 >= a.q)
            throw fail("element code not below q");
        if (x0 == 0 && x1 == 0 && x2 == 0) throw fail("zero triple");
        if (a.points.size() == a.k)
            throw fail("more points than the declared size");
        a.points.push_back({static_cast<felem>(x0), static_cast<felem>(x1),
                            static_cast<felem>(x2)});
    }
    ++ln;
    if (a.points.size() != a.k)
        throw fail("declared size " + std::to_string(a.k) + " but " +
                   std::to_string(a.points.size()) + " points");
    return a;
}

ArcFileContents read_arc_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_arc_file(in);
}

}  // namespace pgarc
