#include "paradyn/mapfile.hpp"

#include <fstream>
#include <sstream>

namespace paradyn {

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    std::string s = hash == std::string::npos ? line : line.substr(0, hash);
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<Rational> parse_row(const std::string& body, unsigned degree, const std::string& label) {
    std::istringstream is(body);
    std::vector<Rational> row;
    std::string tok;
    while (is >> tok) row.push_back(parse_rational(tok));
    if (row.size() != degree + 1)
        throw ParseError(label + " needs " + std::to_string(degree + 1) + " coefficients, got " +
                         std::to_string(row.size()));
    return row;
}

}  // namespace

MapFile parse_map_file(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    MapFile mf;
    bool have_degree = false, have_a = false, have_b = false;
    std::vector<std::pair<std::string, std::string>> rows;
    while (std::getline(in, line)) {
        std::string s = strip_comment(line);
        if (s.empty()) continue;
        auto colon = s.find(':');
        if (colon == std::string::npos) throw ParseError("expected `key: value`, got: " + s);
        std::string key = strip_comment(s.substr(0, colon)), value = s.substr(colon + 1);
        if (key == "degree") {
            if (have_degree) throw ParseError("duplicate degree line");
            long d = std::stol(value);
            if (d < 2) throw ParseError("degree must be at least 2");
            mf.degree = static_cast<unsigned>(d);
            have_degree = true;
        } else if (key == "F0" || key == "F1") {
            rows.emplace_back(key, value);
        } else {
            throw ParseError("unknown key: " + key);
        }
    }
    if (!have_degree) throw ParseError("missing degree line");
    for (const auto& [key, value] : rows) {
        bool& seen = key == "F0" ? have_a : have_b;
        if (seen) throw ParseError("duplicate " + key + " line");
        seen = true;
        (key == "F0" ? mf.a : mf.b) = parse_row(value, mf.degree, key);
    }
    if (!have_a || !have_b) throw ParseError("map file needs both F0 and F1 rows");
    return mf;
}

MapFile read_map_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open map file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_map_file(ss.str());
}

RatMapQ MapFile::to_map() const {
    try {
        return RatMapQ::from_rational(a, b);
    } catch (const DegenerateMap& e) {
        throw DegenerateMap(std::string(e.what()) + " (rho = 0)");
    }
}

std::string MapFile::str() const {
    std::ostringstream os;
    os << "degree: " << degree << "\nF0:";
    for (const auto& c : a) os << ' ' << c.get_str();
    os << "\nF1:";
    for (const auto& c : b) os << ' ' << c.get_str();
    os << '\n';
    return os.str();
}

MapFile map_file_of(const RatMapQ& f) {
    MapFile mf;
    mf.degree = f.degree();
    for (const auto& c : f.lift().F0.coeffs()) mf.a.emplace_back(c);
    for (const auto& c : f.lift().F1.coeffs()) mf.b.emplace_back(c);
    return mf;
}

}  // namespace paradyn
