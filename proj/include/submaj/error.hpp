#pragma once

#include <stdexcept>
#include <string>

namespace submaj {

enum class ErrorCode {
    NonSquare,
    AsymmetryExceedsTolerance,
    NoConvergence,
    ZeroRank,
    NotPSD,
    NonFiniteEntry,
    LengthMismatch,
    AmbientMismatch,
    FullSpace,
    DimMismatch,
    ZeroSpread,
    SpectrumOutOfUnitInterval,
    TooSmall,
    NoEdges,
    VertexCountMismatch,
    EdgeCountMismatch,
    ParseError,
    UnknownTheorem,
    BadDims,
    BadRange,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace submaj
