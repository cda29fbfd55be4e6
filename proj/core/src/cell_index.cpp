#include "dimgrid/cell_index.hpp"

#include <algorithm>
#include <bit>

namespace dimgrid {

namespace {

constexpr std::uint64_t mix(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

CellIndex::CellIndex(std::size_t dim, std::size_t expected_cells) : dim_(dim) {
    const std::size_t cap = std::bit_ceil(std::max<std::size_t>(16, expected_cells * 2));
    slots_.assign(cap, npos);
    mask_ = cap - 1;
    keys_.reserve(expected_cells * dim_);
}

std::uint64_t CellIndex::hash(std::span<const std::int64_t> key) noexcept {
    std::uint64_t h = 0x51ED270B27A2A5A7ull;
    for (std::int64_t v : key) {
        h = mix(h ^ static_cast<std::uint64_t>(v));
    }
    return h;
}

bool CellIndex::equal(std::uint32_t id, std::span<const std::int64_t> key) const noexcept {
    const std::int64_t* stored = keys_.data() + static_cast<std::size_t>(id) * dim_;
    return std::equal(key.begin(), key.end(), stored);
}

std::uint32_t CellIndex::find(std::span<const std::int64_t> key) const noexcept {
    std::size_t pos = hash(key) & mask_;
    while (true) {
        const std::uint32_t id = slots_[pos];
        if (id == npos) return npos;
        if (equal(id, key)) return id;
        pos = (pos + 1) & mask_;
    }
}

std::pair<std::uint32_t, bool> CellIndex::insert(std::span<const std::int64_t> key) {
    if ((count_ + 1) * 2 > slots_.size()) {
        grow();
    }
    std::size_t pos = hash(key) & mask_;
    while (true) {
        const std::uint32_t id = slots_[pos];
        if (id == npos) break;
        if (equal(id, key)) return {id, false};
        pos = (pos + 1) & mask_;
    }
    const auto id = static_cast<std::uint32_t>(count_++);
    slots_[pos] = id;
    keys_.insert(keys_.end(), key.begin(), key.end());
    return {id, true};
}

void CellIndex::grow() {
    const std::size_t cap = slots_.size() * 2;
    slots_.assign(cap, npos);
    mask_ = cap - 1;
    for (std::uint32_t id = 0; id < count_; ++id) {
        std::size_t pos = hash(key(id)) & mask_;
        while (slots_[pos] != npos) pos = (pos + 1) & mask_;
        slots_[pos] = id;
    }
}

}  // namespace dimgrid
