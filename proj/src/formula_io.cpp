#include "piser/formula_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace piser {

namespace {
constexpr const char* kHeader = "pi-series v1";

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}
}  // namespace

std::string render_formula_file(const FormulaFile& f) {
    f.formula.validate();
    std::string out = std::string(kHeader) + "\n";
    if (!f.comment.empty()) out += "# " + f.comment + "\n";
    out += "m=" + std::to_string(f.formula.m) + " p=" + std::to_string(f.formula.p) +
           " a=" + f.formula.a.to_string() + " r=" + f.formula.r.to_string() + "\n";
    out += "S:";
    for (const auto& c : f.formula.S_int) out += " " + c.to_string();
    out += "\n";
    if (f.rcheck) {
        if (!f.rcheck->coeff(0).is_zero())
            throw std::domain_error("formula file: Rcheck must have zero constant term");
        out += "Rcheck:";
        for (int i = 1; i <= f.rcheck->degree(); ++i) out += " " + f.rcheck->coeff(i).to_string();
        out += "\n";
    }
    return out;
}

FormulaFile parse_formula_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    FormulaFile out;
    bool have_header = false, have_params = false, have_S = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        if (!have_header) {
            if (line != kHeader) throw std::invalid_argument("formula file: missing header");
            have_header = true;
            continue;
        }
        if (!have_params) {
            auto ts = tokens(line);
            if (ts.size() != 4) throw std::invalid_argument("formula file: bad parameter line");
            auto val = [&](const std::string& t, const char* key) {
                std::string prefix = std::string(key) + "=";
                if (t.rfind(prefix, 0) != 0)
                    throw std::invalid_argument("formula file: expected " + prefix + "...");
                return t.substr(prefix.size());
            };
            out.formula.m = static_cast<int>(BigInt::parse(val(ts[0], "m")).to_int64());
            out.formula.p = static_cast<int>(BigInt::parse(val(ts[1], "p")).to_int64());
            out.formula.a = BigInt::parse(val(ts[2], "a"));
            out.formula.r = BigInt::parse(val(ts[3], "r"));
            have_params = true;
            continue;
        }
        auto ts = tokens(line);
        if (ts.empty()) continue;
        if (ts[0] == "S:") {
            for (std::size_t i = 1; i < ts.size(); ++i) out.formula.S_int.push_back(BigInt::parse(ts[i]));
            have_S = true;
        } else if (ts[0] == "Rcheck:") {
            std::vector<Rational> c;
            c.push_back(Rational(0));
            for (std::size_t i = 1; i < ts.size(); ++i) c.push_back(Rational::parse(ts[i]));
            out.rcheck = Poly(std::move(c));
        } else {
            throw std::invalid_argument("formula file: unrecognized line: " + line);
        }
    }
    if (!have_header || !have_params || !have_S)
        throw std::invalid_argument("formula file: incomplete");
    out.formula.validate();
    return out;
}

FormulaFile read_formula_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_formula_file(buf.str());
}

void write_formula_file(const std::string& path, const FormulaFile& f) {
    std::string text = render_formula_file(f);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot write " + tmp);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::invalid_argument("cannot rename into place: " + path);
}

}  // namespace piser
