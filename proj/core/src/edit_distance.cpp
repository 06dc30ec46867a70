#include "ddsim/edit_distance.hpp"

namespace ddsim {

int Alphabet::intern(const std::string& label) {
    auto [it, inserted] = ids_.try_emplace(label, static_cast<int>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
}

int Alphabet::find(const std::string& label) const {
    auto it = ids_.find(label);
    return it == ids_.end() ? -1 : it->second;
}

std::vector<int> Alphabet::encode(std::span<const std::string> labels) {
    std::vector<int> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(intern(l));
    return out;
}

ConcurrencyMatrix::ConcurrencyMatrix(const ConcurrencyRelation& relation, Alphabet& alphabet) {
    for (const auto& [a, b] : relation.pairs()) {
        alphabet.intern(a);
        alphabet.intern(b);
    }
    size_ = alphabet.size();
    bits_.assign(size_ * size_, 0);
    for (const auto& [a, b] : relation.pairs()) {
        const auto ia = static_cast<std::size_t>(alphabet.find(a));
        const auto ib = static_cast<std::size_t>(alphabet.find(b));
        bits_[ia * size_ + ib] = bits_[ib * size_ + ia] = 1;
    }
}

double dl_distance(std::span<const int> a, std::span<const int> b, std::size_t alphabet_size,
                   const ConcurrencyMatrix& concurrent) {
    return detail::lowrance_wagner(
        a, b, alphabet_size, [](std::size_t, std::size_t) { return 0.0; },
        [&](std::size_t k, std::size_t i, std::size_t, std::size_t) {
            return concurrent(a[k], a[i]) ? 0.0 : 1.0;
        });
}

double cf_distance(std::span<const std::string> a, std::span<const std::string> b,
                   const ConcurrencyRelation& concurrent) {
    const std::size_t longest = std::max(a.size(), b.size());
    if (longest == 0) return 0.0;
    Alphabet alphabet;
    const auto ea = alphabet.encode(a);
    const auto eb = alphabet.encode(b);
    const ConcurrencyMatrix conc(concurrent, alphabet);
    return dl_distance(ea, eb, alphabet.size(), conc) / static_cast<double>(longest);
}

}  // namespace ddsim
