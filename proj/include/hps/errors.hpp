#ifndef HPS_ERRORS_HPP
#define HPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hps {

/// Invalid argument outside an operation's parameter domain.
class ParameterError : public std::invalid_argument {
  public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Interior operator of an element is numerically singular: kappa^2 sits at
/// (or next to) an interior Dirichlet eigenvalue, so static condensation is
/// ill-posed on that element.
class ResonanceError : public std::runtime_error {
  public:
    ResonanceError(int element_id, const std::string& what)
        : std::runtime_error(what), element_id_(element_id) {}
    int element_id() const { return element_id_; }

  private:
    int element_id_;
};

/// A diagonal block hit a pivot below threshold during block-tridiagonal
/// elimination. Index identifies the offending block (interface or level).
class SingularBlockError : public std::runtime_error {
  public:
    SingularBlockError(int block_index, const std::string& what)
        : std::runtime_error(what), block_index_(block_index) {}
    int block_index() const { return block_index_; }

  private:
    int block_index_;
};

/// Dense matrix passed to the direct solver is numerically singular.
class SingularMatrixError : public std::runtime_error {
  public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested densification exceeds the configured size cap.
class CapExceededError : public std::runtime_error {
  public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// File output failed; message carries the path.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hps

#endif
