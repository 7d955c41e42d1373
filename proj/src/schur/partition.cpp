#include "interlace/errors.hpp"
#include "interlace/schur.hpp"

#include <functional>

namespace interlace {

Partition::Partition(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw ArgumentError("partition has a negative part: " + format_sequence(parts));
        if (i > 0 && parts[i] > parts[i - 1]) throw ArgumentError("partition is not weakly decreasing: " + format_sequence(parts));
    }
    parts_ = parts;
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

std::optional<Partition> Partition::from_sequence(const std::vector<int>& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0) return std::nullopt;
        if (i > 0 && seq[i] > seq[i - 1]) return std::nullopt;
    }
    return Partition(seq);
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[j];
    return Partition(out);
}

std::vector<int> Partition::padded(int len) const {
    if (len < length()) throw ArgumentError("cannot pad " + to_string() + " to " + std::to_string(len) + " parts");
    std::vector<int> out = parts_;
    out.resize(len, 0);
    return out;
}

std::string Partition::to_string() const { return format_sequence(parts_); }

std::string format_sequence(const std::vector<int>& seq) {
    std::string s = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(seq[i]);
    }
    return s + ")";
}

Partition rectangle(int c, int r) {
    if (c < 0 || r < 0) throw ArgumentError("rectangle needs c, r >= 0");
    return Partition(std::vector<int>(r, c));
}

std::vector<Partition> partitions_of(int size, int max_parts) {
    if (size < 0) throw ArgumentError("partitions_of needs size >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(size, size);
    return out;
}

}  // namespace interlace
