#include "laceq/partitions.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace laceq {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

long long Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0LL);
}

int Partition::part(int t) const {
    if (t < 1) throw std::invalid_argument("part index is 1-based");
    return t <= length() ? parts[t - 1] : 0;
}

bool contains_rect(const Partition& lambda, const Rect& r) {
    if (r.rows < 0 || r.cols < 0) throw std::invalid_argument("rectangle sides must be nonnegative");
    if (r.rows == 0 || r.cols == 0) return true;
    return lambda.part(r.rows) >= r.cols;
}

Rect durfee_rect(const Partition& lambda, int offset) {
    // Grow s from the smallest value with a legal s x (s+offset) shape; the
    // containment predicate is downward closed in s, so the first failure is
    // the answer.
    int s = std::max(0, -offset);
    while (contains_rect(lambda, Rect{s + 1, s + 1 + offset})) ++s;
    return Rect{s, s + offset};
}

namespace {

void emit_exact_size(int remaining, int max_part, int rows_left,
                     std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(current));
        return;
    }
    if (rows_left == 0) return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        current.push_back(p);
        emit_exact_size(remaining - p, p, rows_left - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_bounded(int max_part, int max_size) {
    if (max_part < 0 || max_size < 0)
        throw std::invalid_argument("enumeration bounds must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    for (int total = 0; total <= max_size; ++total)
        emit_exact_size(total, max_part, total, current, out);
    return out;
}

std::vector<Partition> enumerate_in_box(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("box sides must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    const long long capacity = static_cast<long long>(rows) * cols;
    for (long long total = 0; total <= capacity; ++total)
        emit_exact_size(static_cast<int>(total), cols, rows, current, out);
    return out;
}

std::string to_string(const Partition& lambda) {
    if (lambda.parts.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(lambda.parts[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    // Strip surrounding blanks; "-" and the empty string both read as the
    // empty partition.
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty() || text == "-") return Partition{};

    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view piece = text.substr(pos, next - pos);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size())
            throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
        parts.push_back(value);
        pos = next + 1;
        if (next == text.size()) break;
    }
    return Partition(std::move(parts));
}

std::string to_string(const Rect& r) {
    return std::to_string(r.rows) + "x" + std::to_string(r.cols);
}

}  // namespace laceq
