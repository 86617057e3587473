#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "schurlab/lie_algebra.hpp"

namespace schurlab {

inline constexpr std::size_t kDefaultWordCap = 5000;

/// Number of degree-k basis elements of the free Lie algebra on d generators
/// (the necklace count (1/k) sum_{j | k} mu(j) d^{k/j}).
std::uint64_t witt_dim(std::size_t d, std::size_t k);

/// A Hall word: either generator `generator` (degree 1) or the bracket
/// [words[left], words[right]] with left < right in Hall order.
struct HallWord {
    std::size_t degree = 1;
    std::size_t generator = 0;
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t position = 0;

    bool is_generator() const noexcept { return degree == 1; }
};

/// Hall set through degree s, ordered by degree, then by (left, right) positions.
///
/// A compound [a, b] belongs to the set iff a < b and b is a generator or
/// b = [b1, b2] with b1 <= a. Throws ResourceLimit when the total word count
/// would exceed `cap`.
std::vector<HallWord> hall_basis(std::size_t d, std::size_t s, std::size_t cap = kDefaultWordCap);

std::string word_to_string(const std::vector<HallWord>& words, std::size_t index);

/// The free nilpotent Lie algebra F / gamma_{s+1}(F) on d generators with its
/// Hall basis and the bracket table obtained by collection.
class FreeNilpotentAlgebra {
public:
    FreeNilpotentAlgebra(std::size_t generators, std::size_t class_bound,
                         std::size_t cap = kDefaultWordCap);

    std::size_t generators() const noexcept { return generators_; }
    std::size_t class_bound() const noexcept { return class_bound_; }
    std::size_t dim() const noexcept { return words_.size(); }
    const std::vector<HallWord>& words() const noexcept { return words_; }
    const LieAlgebra& algebra() const noexcept { return algebra_; }

    /// Index of the first word of degree k (1 <= k <= s+1); degree_offset(s+1) == dim().
    std::size_t degree_offset(std::size_t k) const { return degree_offsets_.at(k - 1); }
    std::size_t degree(std::size_t index) const { return words_.at(index).degree; }

    /// Hall-basis coordinates of [words[a], words[b]].
    SparseVector collect(std::size_t a, std::size_t b) const;

    std::string word_name(std::size_t index) const { return word_to_string(words_, index); }

private:
    std::size_t generators_;
    std::size_t class_bound_;
    std::vector<HallWord> words_;
    std::vector<std::size_t> degree_offsets_;
    LieAlgebra algebra_;
};

FreeNilpotentAlgebra free_nilpotent_algebra(std::size_t d, std::size_t s,
                                            std::size_t cap = kDefaultWordCap);

} // namespace schurlab
