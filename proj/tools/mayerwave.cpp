#include "mayer/cli.hpp"

int main(int argc, char** argv) { return mayer::run_cli(argc, argv); }
