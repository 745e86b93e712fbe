#pragma once

#include <string>
#include <vector>

#include "piser/formula_io.hpp"

namespace piser {

/// On-disk store of verified formulas: one formula file per entry plus an
/// index listing name, parameters, provenance and verification digits. Every
/// entry must have passed verify_formula_numeric at >= 100 digits; add()
/// refuses anything else. Writes are atomic (write-temp-then-rename).
class Catalog {
public:
    /// Uses `dir`, or the PI_SERIES_CATALOG environment variable when empty.
    explicit Catalog(std::string dir);

    struct Entry {
        std::string name;
        int m = 0, p = 0;
        BigInt a;
        std::string provenance;
        int verified_digits = 0;
    };

    const std::string& dir() const { return dir_; }
    std::vector<Entry> list() const;

    /// Verifies the formula numerically (at max(digits, 100)) and stores it.
    /// Throws std::domain_error when verification fails or the name exists.
    void add(const std::string& name, const FormulaFile& f, int digits = 100);

    std::string formula_path(const std::string& name) const;

private:
    std::string dir_;
    std::string index_path() const;
    void append_index(const Entry& e) const;
};

}  // namespace piser
