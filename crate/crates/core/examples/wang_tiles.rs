//! A Wang tile set compiled to a Z^2 SFT.

use symdyn::cli::render_grid;
use symdyn::decision::greedy_point_extract;
use symdyn::document::WangDoc;
use symdyn::Pattern;

const TILES: &str = r#"{"tiles": [
    {"n": 0, "e": 0, "s": 1, "w": 1},
    {"n": 1, "e": 1, "s": 0, "w": 0},
    {"n": 0, "e": 1, "s": 0, "w": 1}
]}"#;

fn main() -> symdyn::Result<()> {
    let doc: WangDoc = serde_json::from_str(TILES)?;
    let x = doc.compile()?;
    println!("{} tiles, {} forbidden adjacencies", doc.tiles.len(), x.forbidden().len());
    for n in 0..=1 {
        println!("patches on B_{n} admissible at margin 1: {}", x.language_upper(n, 1)?.patterns.len());
    }
    let oracle = |q: &Pattern| x.locally_admissible(q, 2).map(|v| !v.is_no()).unwrap_or(false);
    let patch = greedy_point_extract(&oracle, x.ctx(), x.alphabet(), 2)?;
    println!("{}", render_grid(&patch, x.alphabet())?);
    Ok(())
}
