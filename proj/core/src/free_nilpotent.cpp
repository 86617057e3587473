#include "schurlab/free_nilpotent.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "schurlab/errors.hpp"

namespace schurlab {

namespace {

int mobius(std::size_t n) {
    int result = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::uint64_t key(std::size_t a, std::size_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

// Rewrites brackets of Hall words into the Hall basis using antisymmetry and
// the derivation form of Jacobi: [a,[b1,b2]] = [[a,b1],b2] + [b1,[a,b2]].
class Collector {
public:
    Collector(const std::vector<HallWord>& words, std::size_t class_bound)
        : words_(words), class_bound_(class_bound) {
        for (const auto& w : words_)
            if (!w.is_generator()) index_.emplace(key(w.left, w.right), w.position);
    }

    SparseVector bracket(std::size_t a, std::size_t b) {
        if (a == b) return {};
        if (words_[a].degree + words_[b].degree > class_bound_) return {};
        if (a > b) return -bracket(b, a);

        const auto k = key(a, b);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;
        if (!in_progress_.insert(k).second)
            throw std::logic_error("Hall collection did not terminate");

        SparseVector result;
        const HallWord& right = words_[b];
        if (right.is_generator() || right.left <= a) {
            result = SparseVector::unit(index_.at(k));
        } else {
            result = combine_left(bracket(a, right.left), right.right);
            result.add_scaled(combine_right(right.left, bracket(a, right.right)), 1);
        }
        in_progress_.erase(k);
        memo_.emplace(k, result);
        return result;
    }

private:
    // sum_w c_w [w, b]
    SparseVector combine_left(const SparseVector& u, std::size_t b) {
        SparseVector out;
        for (const auto& [w, c] : u.entries()) out.add_scaled(bracket(w, b), c);
        return out;
    }
    // sum_w c_w [a, w]
    SparseVector combine_right(std::size_t a, const SparseVector& u) {
        SparseVector out;
        for (const auto& [w, c] : u.entries()) out.add_scaled(bracket(a, w), c);
        return out;
    }

    const std::vector<HallWord>& words_;
    std::size_t class_bound_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::unordered_map<std::uint64_t, SparseVector> memo_;
    std::unordered_set<std::uint64_t> in_progress_;
};

} // namespace

std::uint64_t witt_dim(std::size_t d, std::size_t k) {
    if (d < 1 || k < 1) throw InputError("witt_dim needs d >= 1 and k >= 1");
    mpz_class total = 0;
    for (std::size_t j = 1; j <= k; ++j) {
        if (k % j != 0) continue;
        int mu = mobius(j);
        if (mu == 0) continue;
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), d, k / j);
        total += mu * power;
    }
    total /= k;
    if (!total.fits_ulong_p()) throw ResourceLimit("Witt dimension overflows");
    return total.get_ui();
}

std::vector<HallWord> hall_basis(std::size_t d, std::size_t s, std::size_t cap) {
    if (d < 1 || s < 1) throw InputError("hall_basis needs d >= 1 and s >= 1");
    std::uint64_t expected = 0;
    for (std::size_t k = 1; k <= s; ++k) {
        expected += witt_dim(d, k);
        if (expected > cap)
            throw ResourceLimit("free nilpotent algebra on " + std::to_string(d) +
                                " generators of class " + std::to_string(s) + " exceeds " +
                                std::to_string(cap) + " basis words");
    }

    std::vector<HallWord> words;
    words.reserve(expected);
    std::vector<std::size_t> first_of_degree{0};
    for (std::size_t g = 0; g < d; ++g) words.push_back({1, g, 0, 0, g});

    for (std::size_t k = 2; k <= s; ++k) {
        first_of_degree.push_back(words.size());
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        // a has degree i, b has degree k - i; a < b forces i <= k - i.
        for (std::size_t i = 1; 2 * i <= k; ++i) {
            const std::size_t a_begin = first_of_degree[i - 1], a_end = first_of_degree[i];
            const std::size_t b_begin = first_of_degree[k - i - 1], b_end = first_of_degree[k - i];
            for (std::size_t a = a_begin; a < a_end; ++a)
                for (std::size_t b = std::max(b_begin, a + 1); b < b_end; ++b)
                    if (words[b].is_generator() || words[b].left <= a) pairs.emplace_back(a, b);
        }
        std::sort(pairs.begin(), pairs.end());
        for (const auto& [a, b] : pairs) words.push_back({k, 0, a, b, words.size()});
    }
    return words;
}

std::string word_to_string(const std::vector<HallWord>& words, std::size_t index) {
    const HallWord& w = words.at(index);
    if (w.is_generator()) return "x" + std::to_string(w.generator + 1);
    return "[" + word_to_string(words, w.left) + "," + word_to_string(words, w.right) + "]";
}

FreeNilpotentAlgebra::FreeNilpotentAlgebra(std::size_t generators, std::size_t class_bound,
                                           std::size_t cap)
    : generators_(generators), class_bound_(class_bound),
      words_(hall_basis(generators, class_bound, cap)) {
    degree_offsets_.assign(class_bound_ + 1, words_.size());
    for (std::size_t idx = words_.size(); idx-- > 0;) degree_offsets_[words_[idx].degree - 1] = idx;

    algebra_ = LieAlgebra(words_.size(),
                          "F(" + std::to_string(generators) + "," + std::to_string(class_bound) + ")");
    Collector collector(words_, class_bound_);
    for (std::size_t a = 0; a < words_.size(); ++a) {
        for (std::size_t b = a + 1; b < words_.size(); ++b) {
            if (words_[a].degree + words_[b].degree > class_bound_) break;
            algebra_.set_structure(a, b, collector.bracket(a, b));
        }
    }
}

SparseVector FreeNilpotentAlgebra::collect(std::size_t a, std::size_t b) const {
    if (a >= dim() || b >= dim()) throw DimensionMismatch("collect: word index out of range");
    return algebra_.basis_bracket(a, b);
}

FreeNilpotentAlgebra free_nilpotent_algebra(std::size_t d, std::size_t s, std::size_t cap) {
    return FreeNilpotentAlgebra(d, s, cap);
}

} // namespace schurlab
