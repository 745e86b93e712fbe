#include "piser/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "piser/evalnum.hpp"

namespace piser {

namespace fs = std::filesystem;

Catalog::Catalog(std::string dir) : dir_(std::move(dir)) {
    if (dir_.empty()) {
        if (const char* env = std::getenv("PI_SERIES_CATALOG")) dir_ = env;
    }
    if (dir_.empty()) throw std::invalid_argument("catalog: no directory given (set PI_SERIES_CATALOG)");
    fs::create_directories(dir_);
}

std::string Catalog::index_path() const { return dir_ + "/index.txt"; }

std::string Catalog::formula_path(const std::string& name) const {
    return dir_ + "/" + name + ".pis";
}

std::vector<Catalog::Entry> Catalog::list() const {
    std::vector<Entry> out;
    std::ifstream in(index_path());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Entry e;
        std::string a;
        ls >> e.name >> e.m >> e.p >> a >> e.provenance >> e.verified_digits;
        if (!ls) throw std::invalid_argument("catalog: corrupt index line: " + line);
        e.a = BigInt::parse(a);
        out.push_back(std::move(e));
    }
    return out;
}

void Catalog::append_index(const Entry& e) const {
    // rebuild into a temp file and rename, so the index stays 1:1 with files
    std::vector<Entry> all = list();
    all.push_back(e);
    std::string tmp = index_path() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        for (const auto& x : all)
            out << x.name << " " << x.m << " " << x.p << " " << x.a.to_string() << " "
                << x.provenance << " " << x.verified_digits << "\n";
    }
    fs::rename(tmp, index_path());
}

void Catalog::add(const std::string& name, const FormulaFile& f, int digits) {
    if (name.empty() || name.find('/') != std::string::npos)
        throw std::invalid_argument("catalog: bad entry name");
    for (const auto& e : list())
        if (e.name == name) throw std::invalid_argument("catalog: name already present: " + name);
    int D = std::max(digits, 100);
    NumericReport rep = verify_formula_numeric(f.formula, D);
    if (!rep.pass)
        throw std::domain_error("catalog: formula failed numeric verification at " +
                                std::to_string(D) + " digits");
    write_formula_file(formula_path(name), f);
    Entry e;
    e.name = name;
    e.m = f.formula.m;
    e.p = f.formula.p;
    e.a = f.formula.a;
    e.provenance = to_string(f.formula.provenance);
    e.verified_digits = D;
    append_index(e);
}

}  // namespace piser
