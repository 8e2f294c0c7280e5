// Billiard words: finite sequences over the alphabet {0,...,d-1}, one letter
// per crossed face family (parallel faces identified).
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace hcb {

class BilliardWord {
public:
    static constexpr int kMaxDim = 9;  // letters rendered as decimal digits

    BilliardWord() = default;

    BilliardWord(int d, std::string letters) : d_(d), letters_(std::move(letters)) {
        if (d_ < 1 || d_ > kMaxDim) throw std::invalid_argument("word dimension out of range");
        for (char c : letters_)
            if (c < '0' || c >= '0' + d_) throw std::invalid_argument("letter out of alphabet");
    }

    int dim() const { return d_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    int letter(int i) const { return letters_.at(static_cast<std::size_t>(i)) - '0'; }
    const std::string& str() const { return letters_; }

    BilliardWord factor(int pos, int len) const {
        return BilliardWord(d_, letters_.substr(static_cast<std::size_t>(pos),
                                                static_cast<std::size_t>(len)));
    }

    friend bool operator==(const BilliardWord& a, const BilliardWord& b) {
        return a.d_ == b.d_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const BilliardWord& a, const BilliardWord& b) { return !(a == b); }
    friend bool operator<(const BilliardWord& a, const BilliardWord& b) {
        return a.letters_ < b.letters_;
    }

private:
    int d_ = 1;
    std::string letters_;
};

}  // namespace hcb

template <>
struct std::hash<hcb::BilliardWord> {
    std::size_t operator()(const hcb::BilliardWord& w) const {
        return std::hash<std::string>()(w.str()) ^ (static_cast<std::size_t>(w.dim()) << 1);
    }
};
