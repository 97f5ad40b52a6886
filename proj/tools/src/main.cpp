#include <cstdio>

// Command line front end. Subcommands land here as the library fills out.
int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::fprintf(stderr, "idkit: no subcommand\n");
  return 3;
}
