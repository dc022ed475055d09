#include "satake/types.hpp"

#include <cctype>

namespace satake {

bool is_canonical_type(TypeLetter letter, int rank) {
  switch (letter) {
    case TypeLetter::A: return rank >= 1;
    case TypeLetter::B: return rank >= 2;
    case TypeLetter::C: return rank >= 3;
    case TypeLetter::D: return rank >= 4;
    case TypeLetter::E: return rank >= 6 && rank <= 8;
    case TypeLetter::F: return rank == 4;
    case TypeLetter::G: return rank == 2;
  }
  return false;
}

SimpleType make_type(TypeLetter letter, int rank) {
  if (is_canonical_type(letter, rank)) return {letter, rank};
  // Documented low-rank aliases with a fixed preferred spelling.
  if ((letter == TypeLetter::B || letter == TypeLetter::C) && rank == 1)
    return {TypeLetter::A, 1};
  if (letter == TypeLetter::C && rank == 2) return {TypeLetter::B, 2};
  if (letter == TypeLetter::D && rank == 3) return {TypeLetter::A, 3};
  throw contract_error("not a simple type: " + type_name(letter, rank));
}

NormalizedTypes normalize_types(TypeLetter letter, int rank) {
  NormalizedTypes out;
  if (rank < 0) throw contract_error("negative rank");
  if (rank == 0) return out;  // A0/B0/C0/D0: absent factor
  if (letter == TypeLetter::D) {
    if (rank == 1) {  // D1 is a one-dimensional torus
      out.torus = 1;
      return out;
    }
    if (rank == 2) {  // D2 = A1 + A1
      out.factors = {SimpleType{TypeLetter::A, 1}, SimpleType{TypeLetter::A, 1}};
      return out;
    }
  }
  out.factors = {make_type(letter, rank)};
  return out;
}

std::string type_name(TypeLetter letter, int rank) {
  static const char* kLetters = "ABCDEFG";
  return std::string(1, kLetters[static_cast<int>(letter)]) +
         std::to_string(rank);
}

std::string type_name(const SimpleType& t) { return type_name(t.letter, t.rank); }

void parse_type_name(const std::string& text, TypeLetter& letter, int& rank) {
  if (text.size() < 2) throw parse_error("bad type name: '" + text + "'");
  switch (text[0]) {
    case 'A': letter = TypeLetter::A; break;
    case 'B': letter = TypeLetter::B; break;
    case 'C': letter = TypeLetter::C; break;
    case 'D': letter = TypeLetter::D; break;
    case 'E': letter = TypeLetter::E; break;
    case 'F': letter = TypeLetter::F; break;
    case 'G': letter = TypeLetter::G; break;
    default: throw parse_error("bad type letter in '" + text + "'");
  }
  rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error("bad type rank in '" + text + "'");
    rank = rank * 10 + (text[i] - '0');
  }
  if (rank <= 0) throw parse_error("bad type rank in '" + text + "'");
}

SimpleType parse_simple_type(const std::string& text) {
  TypeLetter letter;
  int rank;
  parse_type_name(text, letter, rank);
  try {
    return make_type(letter, rank);
  } catch (const contract_error& e) {
    throw parse_error(e.what());
  }
}

std::vector<SimpleType> all_simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int rank = 1; rank <= max_rank; ++rank)
    for (TypeLetter letter : {TypeLetter::A, TypeLetter::B, TypeLetter::C,
                              TypeLetter::D, TypeLetter::E, TypeLetter::F,
                              TypeLetter::G})
      if (is_canonical_type(letter, rank)) out.push_back({letter, rank});
  return out;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::AI: return "AI";
    case Family::AII: return "AII";
    case Family::AIIIa: return "AIIIa";
    case Family::AIIIb: return "AIIIb";
    case Family::CI: return "CI";
    case Family::CIIa: return "CIIa";
    case Family::CIIb: return "CIIb";
    case Family::BI: return "BI";
    case Family::BII: return "BII";
    case Family::DIa: return "DIa";
    case Family::DIb: return "DIb";
    case Family::DIc: return "DIc";
    case Family::DIIIa: return "DIIIa";
    case Family::DIIIb: return "DIIIb";
    case Family::GI: return "GI";
    case Family::FI: return "FI";
    case Family::FII: return "FII";
    case Family::EI: return "EI";
    case Family::EII: return "EII";
    case Family::EIII: return "EIII";
    case Family::EIV: return "EIV";
    case Family::EV: return "EV";
    case Family::EVI: return "EVI";
    case Family::EVII: return "EVII";
    case Family::EVIII: return "EVIII";
    case Family::EIX: return "EIX";
    case Family::TRIV: return "TRIV";
    case Family::DIAG: return "DIAG";
  }
  return "?";
}

}  // namespace satake
