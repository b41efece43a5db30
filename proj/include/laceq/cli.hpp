#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laceq {

/*
 * Batch command-line interface. Commands:
 *
 *   wq ORIENTATION
 *   laces --dims D [--orientation O | --w W] [--format text|json|csv] [--out F]
 *   verify NAME --dims D (--w W | --orientation O) [--N n] [--Nz m] [...]
 *   bijection phi --dims D (--orientation O | --w W) --parts "..." [...]
 *   bijection psi (--orientation O | --w W) --cut FILE [--dims D] [...]
 *
 * Returns 0 on success (or a verified identity), 1 when an identity
 * comparison reports a mismatch, 2 on usage or configuration errors.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laceq
