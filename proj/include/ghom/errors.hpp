#pragma once

#include <stdexcept>
#include <string>

namespace ghom {

enum class Errc {
    ShapeMismatch,
    CompositionNotZero,
    NotAssociative,
    NotLatinSquare,
    NoIdentity,
    TooLarge,
    NotASubgroup,
    NotNormal,
    NotAHomomorphism,
    NotIndependent,
    LengthMismatch,
    RingMismatch,
    GroupMismatch,
    DegreeOverflow,
    SignCheckFailed,
    NotCanonicallyBounded,
    RingUnsupported,
    NotStabilized,
    HypothesisFailed,
    NotAcyclic,
    NotAbelian,
    NotACycle,
    UnknownFormat,
    BadInput,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::CompositionNotZero: return "CompositionNotZero";
        case Errc::NotAssociative: return "NotAssociative";
        case Errc::NotLatinSquare: return "NotLatinSquare";
        case Errc::NoIdentity: return "NoIdentity";
        case Errc::TooLarge: return "TooLarge";
        case Errc::NotASubgroup: return "NotASubgroup";
        case Errc::NotNormal: return "NotNormal";
        case Errc::NotAHomomorphism: return "NotAHomomorphism";
        case Errc::NotIndependent: return "NotIndependent";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::RingMismatch: return "RingMismatch";
        case Errc::GroupMismatch: return "GroupMismatch";
        case Errc::DegreeOverflow: return "DegreeOverflow";
        case Errc::SignCheckFailed: return "SignCheckFailed";
        case Errc::NotCanonicallyBounded: return "NotCanonicallyBounded";
        case Errc::RingUnsupported: return "RingUnsupported";
        case Errc::NotStabilized: return "NotStabilized";
        case Errc::HypothesisFailed: return "HypothesisFailed";
        case Errc::NotAcyclic: return "NotAcyclic";
        case Errc::NotAbelian: return "NotAbelian";
        case Errc::NotACycle: return "NotACycle";
        case Errc::UnknownFormat: return "UnknownFormat";
        case Errc::BadInput: return "BadInput";
    }
    return "Unknown";
}

/// Library-wide exception carrying a machine-readable error code.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace ghom
