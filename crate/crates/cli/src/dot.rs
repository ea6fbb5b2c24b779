//! DOT rendering. Hasse covers are drawn bottom-up without arrowheads;
//! accessibility relations and operator tables are dashed labeled edges.
//! Output is byte-stable for a fixed input: nodes ascending, pairs in
//! row-major order.

use gf_core::{Forest, Gao, GodelAlgebra, Rel};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

struct Dot {
    body: String,
}

impl Dot {
    fn new() -> Dot {
        Dot { body: String::new() }
    }

    fn node(&mut self, id: &str, label: &str) {
        self.body.push_str(&format!("  {} [label=\"{}\"];\n", id, escape(label)));
    }

    fn cover(&mut self, from: &str, to: &str) {
        self.body.push_str(&format!("  {from} -> {to} [dir=none];\n"));
    }

    fn arrow(&mut self, from: &str, to: &str, label: &str) {
        self.body
            .push_str(&format!("  {from} -> {to} [style=dashed, label=\"{}\"];\n", escape(label)));
    }

    fn finish(self) -> String {
        format!("digraph {{\n  rankdir=BT;\n{}}}\n", self.body)
    }
}

fn forest_nodes(d: &mut Dot, f: &Forest) {
    for i in 0..f.n() {
        d.node(&format!("f{}", i + 1), &format!("f{}", i + 1));
    }
    for (a, b) in f.covers() {
        d.cover(&format!("f{}", a + 1), &format!("f{}", b + 1));
    }
}

fn relation(d: &mut Dot, r: &Rel, label: &str) {
    for (a, b) in r.pairs() {
        d.arrow(&format!("f{}", a + 1), &format!("f{}", b + 1), label);
    }
}

pub fn forest(f: &Forest) -> String {
    let mut d = Dot::new();
    forest_nodes(&mut d, f);
    d.finish()
}

pub fn frame2(f: &Forest, rbox: &Rel, rdia: &Rel) -> String {
    let mut d = Dot::new();
    forest_nodes(&mut d, f);
    relation(&mut d, rbox, "box");
    relation(&mut d, rdia, "dia");
    d.finish()
}

pub fn frame1(f: &Forest, r: &Rel) -> String {
    let mut d = Dot::new();
    forest_nodes(&mut d, f);
    relation(&mut d, r, "R");
    d.finish()
}

fn algebra_nodes(d: &mut Dot, a: &GodelAlgebra, names: &[String]) {
    for (i, name) in names.iter().enumerate() {
        d.node(&format!("e{i}"), name);
    }
    for (x, y) in a.order().covers() {
        d.cover(&format!("e{x}"), &format!("e{y}"));
    }
}

pub fn algebra(a: &GodelAlgebra, names: &[String]) -> String {
    let mut d = Dot::new();
    algebra_nodes(&mut d, a, names);
    d.finish()
}

pub fn gao(g: &Gao, names: &[String]) -> String {
    let mut d = Dot::new();
    algebra_nodes(&mut d, g.algebra(), names);
    for x in 0..g.algebra().n() {
        d.arrow(&format!("e{x}"), &format!("e{}", g.box_of(x)), "box");
    }
    for x in 0..g.algebra().n() {
        d.arrow(&format!("e{x}"), &format!("e{}", g.dia_of(x)), "dia");
    }
    d.finish()
}
