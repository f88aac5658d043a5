#include "pimfhe/serialize.hpp"

#include <array>
#include <cstring>

namespace pimfhe {

namespace {

constexpr char kMagic[4] = {'M', 'F', 'H', 'E'};

void put_bytes(std::ostream& os, const void* p, size_t len) {
    os.write(static_cast<const char*>(p), static_cast<std::streamsize>(len));
    if (!os) throw SerializeError("write failed");
}

void get_bytes(std::istream& is, void* p, size_t len) {
    is.read(static_cast<char*>(p), static_cast<std::streamsize>(len));
    if (static_cast<size_t>(is.gcount()) != len) throw SerializeError("truncated stream");
}

template <typename T>
void put_le(std::ostream& os, T v) {
    std::array<unsigned char, sizeof(T)> buf;
    for (size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    put_bytes(os, buf.data(), buf.size());
}

template <typename T>
T get_le(std::istream& is) {
    std::array<unsigned char, sizeof(T)> buf;
    get_bytes(is, buf.data(), buf.size());
    T v = 0;
    for (size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
    return v;
}

uint8_t word_width(const ParamSet& p) { return p.log2_Q > 32 ? 8 : 4; }

void put_word(std::ostream& os, uint64_t v, uint8_t width) {
    if (width == 8)
        put_le<uint64_t>(os, v);
    else
        put_le<uint32_t>(os, static_cast<uint32_t>(v));
}

uint64_t get_word(std::istream& is, uint8_t width) {
    return width == 8 ? get_le<uint64_t>(is) : get_le<uint32_t>(is);
}

void write_header(std::ostream& os, ObjectTag tag, const ParamSet& p, uint8_t width) {
    put_bytes(os, kMagic, 4);
    put_le<uint16_t>(os, kSerializeVersion);
    put_le<uint8_t>(os, static_cast<uint8_t>(tag));
    put_le<uint8_t>(os, width);
    if (p.name.size() > 255) throw SerializeError("parameter-set name too long");
    put_le<uint8_t>(os, static_cast<uint8_t>(p.name.size()));
    put_bytes(os, p.name.data(), p.name.size());
}

struct Header {
    ObjectTag tag;
    uint8_t width;
    std::string name;
};

Header read_header(std::istream& is) {
    char magic[4];
    get_bytes(is, magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0) throw SerializeError("bad magic");
    uint16_t ver = get_le<uint16_t>(is);
    if (ver != kSerializeVersion)
        throw SerializeError("unsupported version " + std::to_string(ver));
    uint8_t tag = get_le<uint8_t>(is);
    if (tag < 1 || tag > 6) throw SerializeError("unknown object tag");
    uint8_t width = get_le<uint8_t>(is);
    if (width != 4 && width != 8) throw SerializeError("unsupported word width");
    uint8_t nl = get_le<uint8_t>(is);
    std::string name(nl, '\0');
    get_bytes(is, name.data(), nl);
    return Header{static_cast<ObjectTag>(tag), width, std::move(name)};
}

Header read_header_expect(std::istream& is, ObjectTag want) {
    Header h = read_header(is);
    if (h.tag != want) throw SerializeError("unexpected object type");
    return h;
}

void expect_eof(std::istream& is) {
    if (is.peek() != std::char_traits<char>::eof()) throw SerializeError("trailing data");
}

} // namespace

void save_secret_key(std::ostream& os, const LweSecretKey& sk) {
    const ParamSet& p = sk.params;
    write_header(os, ObjectTag::SecretKey, p, word_width(p));
    put_le<uint8_t>(os, sk.dist == SecretDist::Binary ? 0 : 1);
    put_le<uint32_t>(os, static_cast<uint32_t>(sk.s.size()));
    // Entries stored as residues mod q.
    for (int8_t v : sk.s) put_word(os, v < 0 ? p.q - 1 : static_cast<uint64_t>(v), word_width(p));
}

LweSecretKey load_secret_key(std::istream& is) {
    Header h = read_header_expect(is, ObjectTag::SecretKey);
    LweSecretKey sk;
    sk.params = load_param_set(h.name);
    sk.dist = get_le<uint8_t>(is) == 0 ? SecretDist::Binary : SecretDist::Ternary;
    uint32_t n = get_le<uint32_t>(is);
    if (n != sk.params.n) throw SerializeError("secret key dimension mismatch");
    sk.s.resize(n);
    for (auto& v : sk.s) {
        uint64_t w = get_word(is, h.width);
        v = w == sk.params.q - 1 ? -1 : static_cast<int8_t>(w);
    }
    expect_eof(is);
    return sk;
}

void save_rlwe_secret(std::ostream& os, const RlweSecret& z) {
    const ParamSet& p = z.params;
    write_header(os, ObjectTag::RlweSecret, p, word_width(p));
    put_le<uint8_t>(os, z.dist == SecretDist::Binary ? 0 : 1);
    put_le<uint32_t>(os, static_cast<uint32_t>(z.z.size()));
    for (int8_t v : z.z) put_word(os, v < 0 ? p.Q - 1 : static_cast<uint64_t>(v), word_width(p));
}

RlweSecret load_rlwe_secret(std::istream& is) {
    Header h = read_header_expect(is, ObjectTag::RlweSecret);
    RlweSecret z;
    z.params = load_param_set(h.name);
    z.dist = get_le<uint8_t>(is) == 0 ? SecretDist::Binary : SecretDist::Ternary;
    uint32_t n = get_le<uint32_t>(is);
    if (n != z.params.N) throw SerializeError("ring secret dimension mismatch");
    z.z.resize(n);
    for (auto& v : z.z) {
        uint64_t w = get_word(is, h.width);
        v = w == z.params.Q - 1 ? -1 : static_cast<int8_t>(w);
    }
    expect_eof(is);
    return z;
}

void save_lwe_ct(std::ostream& os, const ParamSet& params, const LweCiphertext& ct) {
    write_header(os, ObjectTag::LweCt, params, word_width(params));
    put_le<uint32_t>(os, static_cast<uint32_t>(ct.dim()));
    put_le<uint64_t>(os, ct.modulus);
    for (uint64_t v : ct.a) put_word(os, v, word_width(params));
    put_word(os, ct.b, word_width(params));
}

LweCiphertext load_lwe_ct(std::istream& is, std::string* param_name) {
    Header h = read_header_expect(is, ObjectTag::LweCt);
    load_param_set(h.name); // validates the name
    if (param_name) *param_name = h.name;
    LweCiphertext ct;
    uint32_t dim = get_le<uint32_t>(is);
    ct.modulus = get_le<uint64_t>(is);
    if (ct.modulus == 0) throw SerializeError("zero modulus");
    ct.a.resize(dim);
    for (auto& v : ct.a) v = get_word(is, h.width);
    ct.b = get_word(is, h.width);
    expect_eof(is);
    return ct;
}

void save_keyswitch_key(std::ostream& os, const KeySwitchKey& k) {
    const ParamSet& p = k.params;
    write_header(os, ObjectTag::KeySwitchKey, p, word_width(p));
    put_le<uint32_t>(os, k.dim_from);
    put_le<uint64_t>(os, k.words.size());
    for (size_t i = 0; i < k.words.size(); ++i) put_word(os, k.words.get(i), word_width(p));
}

KeySwitchKey load_keyswitch_key(std::istream& is) {
    Header h = read_header_expect(is, ObjectTag::KeySwitchKey);
    KeySwitchKey k;
    k.params = load_param_set(h.name);
    k.dim_from = get_le<uint32_t>(is);
    uint64_t count = get_le<uint64_t>(is);
    const uint64_t expect =
        uint64_t{k.params.N} * k.params.d_s * k.params.B_s * (k.params.n + 1);
    if (k.dim_from != k.params.N || count != expect)
        throw SerializeError("key-switch key shape mismatch");
    k.words = FlatWords(count, k.params.Q);
    for (uint64_t i = 0; i < count; ++i) k.words.set(i, get_word(is, h.width));
    expect_eof(is);
    return k;
}

namespace {

void save_rgsw(std::ostream& os, const RgswCiphertext& g, uint8_t width) {
    put_le<uint32_t>(os, g.N);
    put_le<uint32_t>(os, g.d_g);
    const size_t count = size_t{2} * g.d_g * 2 * g.N;
    for (size_t i = 0; i < count; ++i) put_word(os, g.words.get(i), width);
}

RgswCiphertext load_rgsw(std::istream& is, const ParamSet& p, uint8_t width) {
    RgswCiphertext g;
    g.N = get_le<uint32_t>(is);
    g.d_g = get_le<uint32_t>(is);
    if (g.N != p.N || g.d_g != p.d_g) throw SerializeError("refresh key element shape mismatch");
    g.Q = p.Q;
    const size_t count = size_t{2} * g.d_g * 2 * g.N;
    g.words = FlatWords(count, p.Q);
    for (size_t i = 0; i < count; ++i) g.words.set(i, get_word(is, width));
    return g;
}

} // namespace

void save_refresh_ap(std::ostream& os, const RefreshKeyAP& k) {
    const ParamSet& p = k.params;
    write_header(os, ObjectTag::RefreshAP, p, word_width(p));
    put_le<uint64_t>(os, k.ek.size());
    for (const auto& g : k.ek) save_rgsw(os, g, word_width(p));
}

RefreshKeyAP load_refresh_ap(std::istream& is) {
    Header h = read_header_expect(is, ObjectTag::RefreshAP);
    RefreshKeyAP k;
    k.params = load_param_set(h.name);
    uint64_t count = get_le<uint64_t>(is);
    if (count != uint64_t{k.params.n} * k.params.d_r * k.params.B_r)
        throw SerializeError("refresh key element count mismatch");
    k.ek.reserve(count);
    for (uint64_t i = 0; i < count; ++i) k.ek.push_back(load_rgsw(is, k.params, h.width));
    expect_eof(is);
    return k;
}

void save_refresh_ginx(std::ostream& os, const RefreshKeyGINX& k) {
    const ParamSet& p = k.params;
    write_header(os, ObjectTag::RefreshGINX, p, word_width(p));
    put_le<uint8_t>(os, k.dist == SecretDist::Binary ? 0 : 1);
    put_le<uint64_t>(os, k.ek.size());
    for (const auto& g : k.ek) save_rgsw(os, g, word_width(p));
}

RefreshKeyGINX load_refresh_ginx(std::istream& is) {
    Header h = read_header_expect(is, ObjectTag::RefreshGINX);
    RefreshKeyGINX k;
    k.params = load_param_set(h.name);
    k.dist = get_le<uint8_t>(is) == 0 ? SecretDist::Binary : SecretDist::Ternary;
    uint64_t count = get_le<uint64_t>(is);
    if (count != 2 * uint64_t{k.params.n})
        throw SerializeError("refresh key element count mismatch");
    k.ek.reserve(count);
    for (uint64_t i = 0; i < count; ++i) k.ek.push_back(load_rgsw(is, k.params, h.width));
    expect_eof(is);
    return k;
}

ObjectTag peek_object(std::istream& is, std::string& param_name) {
    Header h = read_header(is);
    param_name = h.name;
    return h.tag;
}

} // namespace pimfhe
