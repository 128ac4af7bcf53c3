#include "jgpt/cli.hpp"

int main(int argc, char** argv) { return jgpt::run(argc, argv); }
