#include "turaev/driver.hpp"

namespace turaev {

LawReport check_bundle(const SymBundle& sb, const std::string& law, const CheckOptions& opt) {
    if (opt.prime) {
        PrimeField f(*opt.prime);
        return detail::check_specialized(f, sb, law, opt);
    }
    RatField f;
    return detail::check_specialized(f, sb, law, opt);
}

} // namespace turaev
