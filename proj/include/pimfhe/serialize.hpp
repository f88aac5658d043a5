#pragma once

#include <iostream>
#include <stdexcept>
#include <string>

#include "pimfhe/bootstrap.hpp"
#include "pimfhe/lwe.hpp"

namespace pimfhe {

// Malformed input: bad magic, version, tag, or a short/overlong stream.
struct SerializeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Envelope layout, little-endian throughout:
//   magic "MFHE" | version u16 | object tag u8 | word width u8 (4 or 8)
//   | name length u8 | parameter-set name bytes | object body
// Word width is 8 only when the ring modulus needs more than 32 bits.
enum class ObjectTag : uint8_t {
    SecretKey = 1,
    LweCt = 2,
    KeySwitchKey = 3,
    RefreshAP = 4,
    RefreshGINX = 5,
    RlweSecret = 6,
};

constexpr uint16_t kSerializeVersion = 1;

void save_secret_key(std::ostream& os, const LweSecretKey& sk);
LweSecretKey load_secret_key(std::istream& is);

void save_rlwe_secret(std::ostream& os, const RlweSecret& z);
RlweSecret load_rlwe_secret(std::istream& is);

// Ciphertext envelopes carry (dim, modulus) so mixed-modulus files are
// self-describing.
void save_lwe_ct(std::ostream& os, const ParamSet& params, const LweCiphertext& ct);
LweCiphertext load_lwe_ct(std::istream& is, std::string* param_name = nullptr);

void save_keyswitch_key(std::ostream& os, const KeySwitchKey& k);
KeySwitchKey load_keyswitch_key(std::istream& is);

void save_refresh_ap(std::ostream& os, const RefreshKeyAP& k);
RefreshKeyAP load_refresh_ap(std::istream& is);

void save_refresh_ginx(std::ostream& os, const RefreshKeyGINX& k);
RefreshKeyGINX load_refresh_ginx(std::istream& is);

// Peeks the header of any envelope: returns tag and parameter-set name.
ObjectTag peek_object(std::istream& is, std::string& param_name);

} // namespace pimfhe
