#include "splintkit/additive_maps.hpp"

#include <algorithm>
#include <array>

namespace splintkit {

AdditiveMapSearch::AdditiveMapSearch(const RootSystem& domain, const RootSystem& codomain, Options opts)
    : dom_(domain), cod_(codomain), opts_(opts)
{
    const int n = static_cast<int>(dom_.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (int k = dom_.sum_index(i, j); k >= 0)
                triples_.push_back({i, j, k});

    std::vector<int> position(n, -1);
    while (static_cast<int>(order_.size()) < n) {
        Step step;
        // smallest unplaced root that is a sum of two placed roots
        for (int c = 0; c < n && step.forced_a < 0; ++c) {
            if (position[c] >= 0)
                continue;
            for (const auto& t : triples_)
                if (t[2] == c && position[t[0]] >= 0 && position[t[1]] >= 0) {
                    step.root = c;
                    step.forced_a = t[0];
                    step.forced_b = t[1];
                    break;
                }
        }
        if (step.forced_a < 0) {
            int c = 0;
            while (position[c] >= 0)
                ++c;
            step.root = c;
        }
        position[step.root] = static_cast<int>(order_.size());
        order_.push_back(step.root);
        steps_.push_back(std::move(step));
    }
    for (const auto& t : triples_) {
        int last = std::max({position[t[0]], position[t[1]], position[t[2]]});
        steps_[last].checks.push_back(t);
    }
}

bool AdditiveMapSearch::run(const RootMask& allowed, const Visitor& visit) const
{
    std::vector<int> img(dom_.size(), -1);
    RootMask used;
    return descend(0, img, used, allowed, visit);
}

bool AdditiveMapSearch::strict_ok(const std::vector<int>& img) const
{
    const std::size_t n = img.size();
    std::vector<int> preimage(cod_.size(), -1);
    for (std::size_t i = 0; i < n; ++i)
        preimage[img[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            int s = cod_.sum_index(img[i], img[j]);
            if (s < 0 || preimage[s] < 0)
                continue;
            if (dom_.sum_index(i, j) != preimage[s])
                return false;
        }
    return true;
}

bool AdditiveMapSearch::descend(std::size_t step_no, std::vector<int>& img, RootMask& used, const RootMask& allowed,
                                const Visitor& visit) const
{
    if (step_no == steps_.size()) {
        if (opts_.strict && !strict_ok(img))
            return true;
        return visit(img);
    }
    const Step& step = steps_[step_no];
    const Parity want = dom_.parity(step.root);

    auto try_image = [&](int c) -> bool {
        img[step.root] = c;
        for (const auto& t : step.checks)
            if (cod_.sum_index(img[t[0]], img[t[1]]) != img[t[2]]) {
                img[step.root] = -1;
                return true;
            }
        used.set(c);
        bool keep_going = descend(step_no + 1, img, used, allowed, visit);
        used.reset(c);
        img[step.root] = -1;
        return keep_going;
    };

    if (step.forced_a >= 0) {
        int c = cod_.sum_index(img[step.forced_a], img[step.forced_b]);
        if (c < 0 || !allowed.test(c) || used.test(c) || cod_.parity(c) != want)
            return true;
        return try_image(c);
    }
    for (std::size_t c = 0; c < cod_.size(); ++c) {
        if (!allowed.test(c) || used.test(c) || cod_.parity(c) != want)
            continue;
        if (!try_image(static_cast<int>(c)))
            return false;
    }
    return true;
}

} // namespace splintkit
