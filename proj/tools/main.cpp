#include "tpossp/cli.hpp"

int main(int argc, char** argv) { return tpossp::cli::run(argc, argv); }
