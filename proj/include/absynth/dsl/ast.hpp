#pragma once

#include <string>
#include <vector>

#include "absynth/dsl/token.hpp"

namespace absynth::dsl {

enum class NodeKind {
  // expressions
  BoolLit,
  IntLit,
  FloatLit,
  Var,
  Epsilon,
  Curr,
  Prev,
  Prev0,
  Prev1,
  CurrList,
  Paren,
  ListLit,
  GetMeta,    // base[weight|bias|equations|layer]
  GetElem,    // base[expr], index normally a shape-field identifier
  Binop,      // text: + - * / and or xor <= >= < > ==
  Not,
  Neg,
  Cond,
  Traverse,   // base.traverse(dir, f, g, h){inv}; text = direction
  ArgReduce,  // argmax/argmin(list, cmp); text selects which
  MaxOp,      // max(list) or max(a, b)
  MinOp,
  ListReduce, // sum/len(list); text selects which
  Map,
  MapList,
  DotProd,
  Concat,
  Lp,         // lp(op, e1, e2); text = minimize|maximize
  Call,       // text = function name
  Curry,      // text = function name, kids = juxtaposed arguments
  DotAccess,  // malformed member access e.name or e.name(...); text = name
  // transformer return tree
  CondTrans,
  ParenTrans,
  TransTuple,
  // declarations
  TypeName,   // text = Int|Float|Bool|Neuron|PolyExp|ZonoExp
  TypeList,   // kids = [element type]
  TypeFn,     // kids = param types..., last kid = return type
  Param,      // text = name, kids = [type]
  ShapeDecl,  // kids = params..., last kid = constraint list expr; num = #params
  FuncDef,    // text = name, kids = params... + [body]; num = #params
  Rule,       // text = operator name, kids = [trans_ret]
  TransformerDef,  // text = transformer name, kids = rules
  Program,    // kids in file order
};

struct Node {
  NodeKind kind = NodeKind::Program;
  Span span;
  std::string text;
  double num = 0.0;
  std::vector<int> kids;
};

/// Flat arena AST; node 0 is unused so that 0 can never alias a real child.
class Ast {
 public:
  Ast() { nodes_.emplace_back(); }

  int add(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }
  const Node& at(int id) const { return nodes_.at(id); }
  Node& at(int id) { return nodes_.at(id); }
  int root() const { return root_; }
  void set_root(int id) { root_ = id; }
  size_t size() const { return nodes_.size(); }

  /// First child of the program with the given kind, or -1.
  int find_decl(NodeKind kind) const;
  std::vector<int> decls(NodeKind kind) const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

/// Equality up to spans (used by the round-trip property).
bool structurally_equal(const Ast& a, const Ast& b);
bool structurally_equal(const Ast& a, int na, const Ast& b, int nb);

}  // namespace absynth::dsl
