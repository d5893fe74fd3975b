#ifndef PAULIGEO_CLI_HPP
#define PAULIGEO_CLI_HPP

namespace pauligeo {

// Command-line entry point.  Returns 0 on success, 2 on usage errors,
// 3 on domain errors.
int run(int argc, const char* const* argv);

}  // namespace pauligeo

#endif
