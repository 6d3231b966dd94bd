#include "mstable/markset.hpp"

#include "mstable/error.hpp"

#include <charconv>

namespace mstable {

MarkSet MarkSet::of(std::initializer_list<int> marks) { return of(std::vector<int>(marks)); }

MarkSet MarkSet::of(const std::vector<int>& marks) {
    MarkSet s;
    for (int i : marks) {
        require(i >= 1 && i <= kMaxMarks, ErrorCode::InvalidIndex, "mark " + std::to_string(i) + " out of range");
        require(!s.contains(i), ErrorCode::InvalidArgument, "duplicate mark " + std::to_string(i));
        s = s.with(i);
    }
    return s;
}

MarkSet MarkSet::full(int n) {
    require(n >= 0 && n <= kMaxMarks, ErrorCode::OutOfRange, "n must lie in [0, 62]");
    return MarkSet(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
}

MarkSet MarkSet::with(int mark) const {
    require(mark >= 1 && mark <= kMaxMarks, ErrorCode::InvalidIndex, "mark out of range");
    return MarkSet(bits_ | (std::uint64_t{1} << (mark - 1)));
}

MarkSet MarkSet::parse(std::string_view text) {
    std::vector<int> marks;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view tok = text.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            fail(ErrorCode::ParseError, "bad mark set key '" + std::string(text) + "'");
        marks.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    for (std::size_t i = 1; i < marks.size(); ++i)
        require(marks[i - 1] < marks[i], ErrorCode::ParseError, "mark set keys must be strictly ascending");
    return of(marks);
}

std::vector<int> MarkSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string MarkSet::to_string() const {
    std::string out;
    for (int i : members()) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

std::vector<MarkSet> subsets_of_size(int n, int k) {
    std::vector<MarkSet> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {MarkSet{}};
    // Gosper's hack over n-bit words.
    std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
    std::uint64_t x = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    while (x < limit) {
        out.push_back(MarkSet::from_bits(x));
        std::uint64_t c = x & (~x + 1);
        std::uint64_t r = x + c;
        if (r == 0) break;
        x = (((r ^ x) >> 2) / c) | r;
    }
    return out;
}

}  // namespace mstable
