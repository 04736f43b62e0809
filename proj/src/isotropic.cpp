#include "torlink/isotropic.hpp"

#include <stdexcept>

#include "torlink/linking.hpp"

namespace torlink {

bool is_isotropic(const Subspace& s, const FpMatrix& gram) {
    const int p = s.p;
    FpMatrix restricted = s.basis * gram * s.basis.transpose();
    for (Eigen::Index i = 0; i < restricted.rows(); ++i)
        for (Eigen::Index j = 0; j < restricted.cols(); ++j)
            if (restricted(i, j) % p != 0) return false;
    return true;
}

std::vector<Subspace> enumerate_lagrangians(const LinkingForm& form) {
    Int prime;
    if (!form.group.is_elementary_abelian(&prime) || form.group.rank() % 2 != 0)
        throw std::invalid_argument(
            "enumerate_lagrangians: group not elementary abelian of even rank");
    const int p = static_cast<int>(prime);
    const int n2 = static_cast<int>(form.group.rank());
    const FpMatrix gram = gram_mod_p(form, p);

    std::vector<Subspace> out;
    enumerate_subspaces(p, n2, n2 / 2, [&](const Subspace& s) {
        if (is_isotropic(s, gram)) out.push_back(s);
    });
    return out;
}

std::vector<std::pair<size_t, size_t>> dual_pair_indices(
    const std::vector<Subspace>& lagrangians) {
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < lagrangians.size(); ++i)
        for (size_t j = i + 1; j < lagrangians.size(); ++j) {
            if (lagrangians[i].dim() + lagrangians[j].dim() !=
                lagrangians[i].ambient_dim)
                continue;
            if (subspace_intersection_dim(lagrangians[i], lagrangians[j]) == 0)
                pairs.emplace_back(i, j);
        }
    return pairs;
}

std::vector<DualPair> enumerate_dual_pairs(const std::vector<Subspace>& lagrangians) {
    std::vector<DualPair> out;
    for (auto [i, j] : dual_pair_indices(lagrangians))
        out.push_back({lagrangians[i], lagrangians[j]});
    return out;
}

}  // namespace torlink
