#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace icolor {

// Nondecreasing sequence of nonnegative integers (the L of LSE/USE).
class ColorSequence {
public:
    ColorSequence() = default;
    explicit ColorSequence(std::vector<int> values) : values_(std::move(values)) {
        for (int x : values_)
            if (x < 0) throw std::invalid_argument("sequence: negative element");
        std::sort(values_.begin(), values_.end());
    }

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    int operator[](int i) const { return values_[i]; }
    int min() const { return values_.front(); }
    int max() const { return values_.back(); }
    const std::vector<int>& values() const { return values_; }

    friend bool operator==(const ColorSequence&, const ColorSequence&) = default;

private:
    std::vector<int> values_;
};

// True iff every integer between min and max occurs.
inline bool is_continuous(const ColorSequence& seq) {
    if (seq.empty()) return true;
    for (int i = 0; i + 1 < seq.size(); ++i)
        if (seq[i + 1] - seq[i] > 1) return false;
    return true;
}

// Elementwise seq + p (the paper's L ⊕ p).
inline ColorSequence shift(const ColorSequence& seq, int p) {
    if (p < 0) throw std::invalid_argument("shift: p must be nonnegative");
    std::vector<int> v = seq.values();
    for (int& x : v) x += p;
    return ColorSequence(std::move(v));
}

}  // namespace icolor
