#pragma once

#include <stdexcept>

namespace rls {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error { public: using Error::Error; };
class NonSPDInput : public Error { public: using Error::Error; };
class NumericalBreakdown : public Error { public: using Error::Error; };
class SvdFailure : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };
class InsufficientData : public Error { public: using Error::Error; };
class ParameterOutOfRange : public Error { public: using Error::Error; };
class ScalarOnly : public Error { public: using Error::Error; };
class ConfigError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };

}  // namespace rls
