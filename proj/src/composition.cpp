#include "sandlat/composition.hpp"

#include <charconv>
#include <numeric>

namespace sandlat {

const char* to_string(Err e) {
    switch (e) {
        case Err::SumMismatch: return "SumMismatch";
        case Err::NegativePart: return "NegativePart";
        case Err::TooLong: return "TooLong";
        case Err::InvalidN: return "InvalidN";
        case Err::NotAPartition: return "NotAPartition";
        case Err::MismatchedN: return "MismatchedN";
        case Err::PositionOutOfRange: return "PositionOutOfRange";
        case Err::CapacityExceeded: return "CapacityExceeded";
        case Err::NodeNotInGraph: return "NodeNotInGraph";
        case Err::NonIntegral: return "NonIntegral";
        case Err::NegativeShot: return "NegativeShot";
        case Err::NegativeHeight: return "NegativeHeight";
        case Err::TriangularCase: return "TriangularCase";
        case Err::ThetaOneDegenerate: return "ThetaOneDegenerate";
        case Err::InvalidRule: return "InvalidRule";
        case Err::ParseError: return "ParseError";
    }
    return "Unknown";
}

const char* to_string(CompositionKind k) {
    switch (k) {
        case CompositionKind::General: return "General";
        case CompositionKind::Partition: return "Partition";
        case CompositionKind::StrictPartition: return "StrictPartition";
    }
    return "Unknown";
}

Composition make_composition(std::vector<int> parts, int n) {
    if (n < 1) fail(Err::InvalidN, "composition size must be >= 1, got " + std::to_string(n));
    for (int v : parts) {
        if (v < 0) fail(Err::NegativePart, "negative part " + std::to_string(v));
    }
    const auto nu = static_cast<std::size_t>(n);
    if (parts.size() > nu) {
        for (std::size_t i = nu; i < parts.size(); ++i) {
            if (parts[i] != 0) {
                fail(Err::TooLong, "non-zero part at position " + std::to_string(i + 1) +
                                       " beyond n = " + std::to_string(n));
            }
        }
        parts.resize(nu);
    }
    long long sum = std::accumulate(parts.begin(), parts.end(), 0LL);
    if (sum != n) {
        fail(Err::SumMismatch,
             "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(n));
    }
    parts.resize(nu, 0);
    return Composition(std::move(parts));
}

Composition staircase_seed(int n) {
    if (n < 1) fail(Err::InvalidN, "seed requires n >= 1, got " + std::to_string(n));
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    parts[0] = n;
    return make_composition(std::move(parts), n);
}

Composition parse_composition(std::string_view text, int n) {
    auto skip_ws = [&](std::size_t& i) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    std::size_t i = 0;
    skip_ws(i);
    if (i >= text.size() || text[i] != '[')
        fail(Err::ParseError, "composition text must start with '['");
    ++i;
    std::vector<int> parts;
    skip_ws(i);
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws(i);
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc())
                fail(Err::ParseError, "expected integer in composition text");
            i = static_cast<std::size_t>(ptr - text.data());
            parts.push_back(value);
            skip_ws(i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            fail(Err::ParseError, "expected ',' or ']' in composition text");
        }
    }
    skip_ws(i);
    if (i != text.size()) fail(Err::ParseError, "trailing characters after ']'");
    return make_composition(std::move(parts), n);
}

long long Composition::energy() const {
    long long e = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        e += static_cast<long long>(i) * parts_[i];
    return e;
}

Composition Composition::dual() const {
    if (!is_partition()) fail(Err::NotAPartition, "dual requires a partition: " + to_string());
    std::vector<int> d(parts_.size(), 0);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        int height = static_cast<int>(i) + 1;
        int count = 0;
        for (int v : parts_)
            if (v >= height) ++count;
        d[i] = count;
    }
    return make_composition(std::move(d), n());
}

CompositionKind Composition::kind() const {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1]) return CompositionKind::General;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i + 1] > 0 && parts_[i] <= parts_[i + 1]) return CompositionKind::Partition;
    return CompositionKind::StrictPartition;
}

bool Composition::is_partition() const { return kind() != CompositionKind::General; }

bool Composition::is_strict_partition() const { return kind() == CompositionKind::StrictPartition; }

int Composition::positive_prefix_length() const {
    int len = 0;
    for (int v : parts_) {
        if (v <= 0) break;
        ++len;
    }
    return len;
}

std::string Composition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

bool dominance_leq(const Composition& a, const Composition& b) {
    if (a.n() != b.n())
        fail(Err::MismatchedN, "dominance_leq on different n: " + std::to_string(a.n()) + " vs " +
                                   std::to_string(b.n()));
    long long pa = 0, pb = 0;
    for (int i = 1; i <= a.n(); ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa > pb) return false;
    }
    return true;
}

std::size_t CompositionHash::operator()(const Composition& c) const noexcept {
    // FNV-1a over the parts.
    std::size_t h = 1469598103934665603ULL;
    for (int v : c.parts()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace sandlat
