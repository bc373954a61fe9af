#ifndef NEGORD_TYPOS_HPP
#define NEGORD_TYPOS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace negord {

/// A published table cell whose printed value differs from the computed one.
struct KnownTypo {
  std::string family;       ///< family tag, e.g. "y1"
  std::string lambda;       ///< "symbolic" or the numeric lambda of the table, e.g. "1"
  long n = 0;
  long k = 0;
  std::string printed;      ///< the cell as printed, in plain text
  /// Printed value in wire form when it has one ("p/q" or Laurent JSON).
  std::optional<std::string> printed_value;
  std::string reason;       ///< independent check showing the printed cell is wrong
};

const std::vector<KnownTypo>& known_typos();

/// nullptr when the cell is not in the ledger.
const KnownTypo* find_typo(std::string_view family, std::string_view lambda, long n, long k);

}  // namespace negord

#endif  // NEGORD_TYPOS_HPP
