#include "galcov/perm.hpp"

namespace galcov {

std::string Permutation::cycle_string() const {
    std::vector<bool> seen(img_.size(), false);
    std::string out;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        out += '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = img_[j];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

}  // namespace galcov
