//! Runs the small acceptance matrix and prints one line per criterion.

fn main() -> superschur::Result<()> {
    for c in superschur::matrix::run_small()? {
        println!("{}", c.line());
    }
    Ok(())
}
