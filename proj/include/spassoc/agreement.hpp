#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace spassoc {

/// 2x2 agreement counts between two boolean significance labelings; the
/// first labeling plays the "positive" role, the second the "prediction".
struct AgreementTable {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;

    std::int64_t total() const { return tp + fp + fn + tn; }

    static AgreementTable from_labels(const std::vector<bool>& reference,
                                      const std::vector<bool>& prediction) {
        if (reference.size() != prediction.size()) {
            throw std::invalid_argument("labelings differ in length");
        }
        AgreementTable t;
        for (std::size_t i = 0; i < reference.size(); ++i) {
            if (reference[i] && prediction[i]) ++t.tp;
            else if (reference[i] && !prediction[i]) ++t.fn;
            else if (!reference[i] && prediction[i]) ++t.fp;
            else ++t.tn;
        }
        return t;
    }
};

/// Matthews correlation coefficient; a zero factor in the denominator
/// yields 0 (no association) by convention.
inline double mcc(const AgreementTable& t) {
    const double tp = static_cast<double>(t.tp);
    const double fp = static_cast<double>(t.fp);
    const double fn = static_cast<double>(t.fn);
    const double tn = static_cast<double>(t.tn);
    const double denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
    if (denom <= 0.0) return 0.0;
    return (tp * tn - fp * fn) / std::sqrt(denom);
}

/// Rand index (TP + TN) / n: raw fraction of agreement.
inline double rand_index(const AgreementTable& t) {
    const std::int64_t n = t.total();
    if (n == 0) throw std::invalid_argument("agreement table is empty");
    return static_cast<double>(t.tp + t.tn) / static_cast<double>(n);
}

}  // namespace spassoc
