#include "cfgwc/core.hpp"

namespace cfgwc {

std::uint64_t derive_seed(std::uint64_t base, std::string_view component) {
    // FNV-1a, then splitmix-style finalization of the combined value.
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : component) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::uint64_t z = base ^ h;
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace cfgwc
