// common.hpp
// Shared error type, deterministic RNG and a small thread-pool helper.

#ifndef DPZ_COMMON_HPP
#define DPZ_COMMON_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace dpz {

enum class Err {
    NonPrime,
    EvenCharacteristic,
    DegreeTooLarge,
    DivideByZero,
    SpecMismatch,
    WildOrder,
    ZeroPolynomial,
    SingularMatrix,
    DimensionMismatch,
    CapExceeded,
    SearchSpaceTooLarge,
    TooFewPoints,
    SplittingBoundExceeded,
    NotAnIsometry,
    NoMatch,
    AmbiguousPairing,
    SingularMember,
    BadParameters,
    NotSmooth,
    RowNotFound,
    NoWitnessFound,
    ZeroDiscriminant,
    MultipleRoots,
    IndexOutOfRange,
    ParseError,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

  private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline const char* err_name(Err e) {
    switch (e) {
        case Err::NonPrime: return "NonPrime";
        case Err::EvenCharacteristic: return "EvenCharacteristic";
        case Err::DegreeTooLarge: return "DegreeTooLarge";
        case Err::DivideByZero: return "DivideByZero";
        case Err::SpecMismatch: return "SpecMismatch";
        case Err::WildOrder: return "WildOrder";
        case Err::ZeroPolynomial: return "ZeroPolynomial";
        case Err::SingularMatrix: return "SingularMatrix";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::CapExceeded: return "CapExceeded";
        case Err::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case Err::TooFewPoints: return "TooFewPoints";
        case Err::SplittingBoundExceeded: return "SplittingBoundExceeded";
        case Err::NotAnIsometry: return "NotAnIsometry";
        case Err::NoMatch: return "NoMatch";
        case Err::AmbiguousPairing: return "AmbiguousPairing";
        case Err::SingularMember: return "SingularMember";
        case Err::BadParameters: return "BadParameters";
        case Err::NotSmooth: return "NotSmooth";
        case Err::RowNotFound: return "RowNotFound";
        case Err::NoWitnessFound: return "NoWitnessFound";
        case Err::ZeroDiscriminant: return "ZeroDiscriminant";
        case Err::MultipleRoots: return "MultipleRoots";
        case Err::IndexOutOfRange: return "IndexOutOfRange";
        case Err::ParseError: return "ParseError";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

// Deterministic generator; every randomized routine threads one of these through.
using Rng = std::mt19937_64;

inline uint64_t rng_below(Rng& rng, uint64_t n) { return n ? rng() % n : 0; }

// Chunked parallel loop. Results must be merged by the caller in chunk order if
// determinism matters; `fn(begin, end)` runs on [begin, end).
inline void parallel_chunks(uint64_t n, const std::function<void(uint64_t, uint64_t)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw < 2 || n < 4096) {
        fn(0, n);
        return;
    }
    unsigned parts = hw;
    std::vector<std::thread> threads;
    uint64_t chunk = (n + parts - 1) / parts;
    for (unsigned t = 0; t < parts; ++t) {
        uint64_t b = t * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        threads.emplace_back(fn, b, e);
    }
    for (auto& th : threads) th.join();
}

}  // namespace dpz

#endif
