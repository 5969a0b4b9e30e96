// Prints the amino-acid S-box as the canonical docs/amino_sbox.txt table.

#include <cstdio>

#include "dnacrypt/amino_sbox.hpp"

int main() {
  const dnacrypt::AminoSBox& box = dnacrypt::amino_sbox();
  std::printf("# Amino-acid S-box. Row r, column c holds entry 16*r + c.\n");
  std::printf("# Byte b = quads q0 q1 q2 q3 (A=00 C=01 G=10 T=11, q0 most significant);\n");
  std::printf("# codon q0 q1 q2, classes ordered ARNDCQEGHILKMFPSTWYV then stop.\n");
  std::printf("# forward\n");
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) std::printf(c ? " %02x" : "%02x", box.forward[16 * r + c]);
    std::printf("\n");
  }
  std::printf("# inverse\n");
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) std::printf(c ? " %02x" : "%02x", box.inverse[16 * r + c]);
    std::printf("\n");
  }
  return 0;
}
