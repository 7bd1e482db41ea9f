use pure_betti::report::{cmd_reproduce, OutputFormat, Section};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let outcome = cmd_reproduce(Section::All, None)?;
    print!("{}", outcome.render(OutputFormat::Table));
    Ok(())
}
