#ifndef HPD_HASH_HPP
#define HPD_HASH_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace hpd {

inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ULL) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::uint64_t h);
std::string fnv1a64_hex_of_file(const std::string& path);

}  // namespace hpd

#endif
