#include "piser/formula.hpp"

#include <stdexcept>

namespace piser {

void Formula::validate() const {
    if (!(0 < p && p < m)) throw std::domain_error("Formula: requires 0 < p < m");
    if (a.is_zero()) throw std::domain_error("Formula: a must be nonzero");
    if (r.sign() <= 0) throw std::domain_error("Formula: r must be >= 1");
    if (S_int.empty() || S_int.back().is_zero())
        throw std::domain_error("Formula: S must be nonempty with nonzero leading coefficient");
}

BigInt Formula::eval_S(std::int64_t n) const {
    BigInt acc;
    BigInt bn(n);
    for (std::size_t i = S_int.size(); i-- > 0;) acc = acc * bn + S_int[i];
    return acc;
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::proven: return "proven";
        case Provenance::discovered: return "discovered";
        case Provenance::imported: return "imported";
    }
    return "imported";
}

}  // namespace piser
