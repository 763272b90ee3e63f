//! One grammar, three logics.
//!
//! The same formula text is evaluated as quantum logic (subspaces),
//! weak-Heyting logic (ray sets with `~` and `->`), and classical logic
//! (ray sets with `!`). The semantics agree on `&` and `|`, and differ
//! exactly at negation and implication — each semantics loudly rejects the
//! connectives that do not belong to it.
//!
//! Run:
//! ```sh
//! cargo run -p qlogic --example three_semantics
//! ```

use qlogic::context::{eval, Context, Semantics, Value};
use qlogic::formula::parse;

const CONTEXT: &str = "\
# a line, its embedding, and the full plane
space dim=2
sub A = span((1/1, 0/1))
sub B = span((0, 1))
set SA = r(A)
set SB = r(B)
";

fn show(ctx: &Context, text: &str, semantics: Semantics) {
    let formula = parse(text).unwrap();
    match eval(&formula, ctx, semantics) {
        Ok(Value::Subspace(s)) => println!("[{semantics}] {text}  =>  {s}"),
        Ok(Value::RaySet(s)) => println!("[{semantics}] {text}  =>  {s}"),
        Err(e) => println!("[{semantics}] {text}  =>  rejected: {e}"),
    }
}

fn main() {
    let ctx = Context::parse(CONTEXT).unwrap();

    println!("# excluded middle: quantum yes, weak-Heyting no");
    show(&ctx, "A | ~A", Semantics::Quantum);
    show(&ctx, "SA | ~SA", Semantics::WeakHeyting);
    show(&ctx, "SA | !SA", Semantics::Classical);

    println!("# implication: weak-Heyting arrow vs material conditional");
    show(&ctx, "SA -> SB", Semantics::WeakHeyting);
    show(&ctx, "SA -> SB", Semantics::Classical);
    show(&ctx, "SA -> bot", Semantics::WeakHeyting);

    println!("# each semantics rejects foreign connectives");
    show(&ctx, "!A", Semantics::Quantum);
    show(&ctx, "A -> B", Semantics::Quantum);
    show(&ctx, "!SA", Semantics::WeakHeyting);
    show(&ctx, "~SA", Semantics::Classical);

    println!("# subspace atoms lift through r outside quantum semantics");
    show(&ctx, "A & B", Semantics::Quantum);
    show(&ctx, "A & B", Semantics::Classical);
    show(&ctx, "A | B", Semantics::Classical);
}
