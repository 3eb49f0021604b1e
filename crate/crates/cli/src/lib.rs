//! The `lutz` command-line tool.
//!
//! Exit codes: 0 success, 1 parse error, 2 validation error, 3 undefined
//! invariant, 4 usage error. A file name of `-` means standard input, and
//! `--out -` (the default) standard output.

pub mod render;

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use lutz_core::homotopy::{chern_class, d3, d3_standard, d3_terms, relative_d3, HomotopyError};
use lutz_core::lutz::{explicit_lutz_front, expected_d3_change, lutz_on_transverse, lutz_pair, s3_overtwisted, LutzError};
use lutz_core::surgery::{overtwisted_framing_check, SurgeryError};
use lutz_core::{parse_front_file, FrontDiagram, FrontError, FrontFile, LutzSign, Rational, SurgeryPresentation};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Undefined(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Undefined(_) => 3,
            CliError::Usage(_) => 4,
        }
    }
}

impl From<FrontError> for CliError {
    fn from(e: FrontError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<SurgeryError> for CliError {
    fn from(e: SurgeryError) -> Self {
        match e {
            SurgeryError::Front(f) => f.into(),
            SurgeryError::Malformed(_) | SurgeryError::InvalidCoefficient(_) | SurgeryError::UnresolvableLinking { .. } => {
                CliError::Parse(e.to_string())
            }
            SurgeryError::IndexError { .. } | SurgeryError::SelfSlide(_) => CliError::Usage(e.to_string()),
            SurgeryError::NotACancellingPair(_) | SurgeryError::MalformedPair(_) => CliError::Validation(e.to_string()),
        }
    }
}

impl From<LutzError> for CliError {
    fn from(e: LutzError) -> Self {
        match e {
            LutzError::Front(f) => f.into(),
            LutzError::Surgery(s) => s.into(),
            LutzError::ZeroNotAllowed | LutzError::UnknownSign(_) | LutzError::ComponentInHost(_) => {
                CliError::Usage(e.to_string())
            }
        }
    }
}

impl From<HomotopyError> for CliError {
    fn from(e: HomotopyError) -> Self {
        CliError::Undefined(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "lutz", version, about = "Legendrian fronts, Lutz twists and their homotopy invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SignArg {
    Pos,
    Neg,
}

impl From<SignArg> for LutzSign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Pos => LutzSign::Positive,
            SignArg::Neg => LutzSign::Negative,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a `.front` or `.tfront` file.
    Validate { file: PathBuf },
    /// Print tb and rot (or sl for transverse fronts) and linking numbers.
    Invariants { file: PathBuf },
    /// Surgery presentation of a Lutz twist along one component.
    Lutz {
        file: PathBuf,
        #[arg(long)]
        component: usize,
        #[arg(long, value_enum, default_value = "pos")]
        sign: SignArg,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// d3 of a presentation.
    D3 {
        file: PathBuf,
        /// Also print c², σ, χ and q.
        #[arg(long)]
        terms: bool,
    },
    /// First Chern class of a presentation as JSON.
    C1 { file: PathBuf },
    /// Replace component `from` by `from + sign·over`.
    Slide {
        file: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        over: usize,
        #[arg(long, allow_negative_numbers = true, value_parser = parse_unit)]
        sign: i64,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Remove a knot together with its 0-framed meridian.
    Cancel {
        file: PathBuf,
        #[arg(long)]
        knot: usize,
        #[arg(long)]
        meridian: usize,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Run the triviality, overtwisted-disc and d3 checks for a Lutz pair.
    VerifyLutz {
        file: PathBuf,
        #[arg(long)]
        component: usize,
        #[arg(long, value_enum, default_value = "pos")]
        sign: SignArg,
    },
    /// Overtwisted structure on the 3-sphere with d3 = n - 1/2.
    S3 {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Draw a front.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        /// Draw the Lutz pair on this component instead, with the knot K.
        #[arg(long)]
        lutz: Option<usize>,
        #[arg(long, value_enum, default_value = "pos")]
        sign: SignArg,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
}

fn parse_unit(s: &str) -> Result<i64, String> {
    match s {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("sign must be +1 or -1, not `{s}`")),
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    color: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<String, CliError> {
        if path.as_os_str() == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
        }
    }

    fn write(&mut self, path: &PathBuf, text: &str) -> Result<(), CliError> {
        if path.as_os_str() == "-" {
            self.stdout.write_all(text.as_bytes()).map_err(|e| CliError::Usage(format!("writing stdout: {e}")))
        } else {
            fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
        }
    }

    fn print(&mut self, text: &str) -> Result<(), CliError> {
        self.write(&PathBuf::from("-"), text)
    }

    fn front(&mut self, path: &PathBuf) -> Result<FrontFile, CliError> {
        let text = self.read(path)?;
        parse_front_file(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }

    fn legendrian(&mut self, path: &PathBuf) -> Result<FrontDiagram, CliError> {
        match self.front(path)? {
            FrontFile::Legendrian(d) => Ok(d),
            FrontFile::Transverse(t) => Ok(t.to_legendrian()?),
        }
    }

    fn presentation(&mut self, path: &PathBuf) -> Result<SurgeryPresentation, CliError> {
        let text = self.read(path)?;
        Ok(SurgeryPresentation::from_json(&text)?)
    }

    fn status(&self, ok: bool) -> String {
        let word = if ok { "pass" } else { "FAIL" };
        if self.color {
            format!("\x1b[{}m{word}\x1b[0m", if ok { "32" } else { "31;1" })
        } else {
            word.to_owned()
        }
    }
}

/// Whether to style output: only on a terminal and only without `NO_COLOR`.
pub fn color_enabled(no_color: Option<OsString>, is_terminal: bool) -> bool {
    is_terminal && no_color.map_or(true, |v| v.is_empty())
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = if color { e.render().ansi().to_string() } else { e.render().to_string() };
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    4
                }
            };
        }
    };
    let mut io = Io { stdin, stdout, color };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let prefix = if color { "\x1b[31;1merror:\x1b[0m" } else { "error:" };
            let _ = writeln!(stderr, "{prefix} {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, io: &mut Io) -> Result<i32, CliError> {
    match command {
        Command::Validate { file } => {
            let report = match io.front(&file)? {
                FrontFile::Legendrian(d) => d.validate(),
                FrontFile::Transverse(t) => t.validate_transverse(),
            };
            if report.is_valid() {
                io.print(&format!(
                    "valid: {} component(s), {} crossing(s)\n",
                    report.components, report.crossings
                ))?;
                Ok(0)
            } else {
                let lines: Vec<String> = report.issues.iter().map(ToString::to_string).collect();
                Err(CliError::Validation(format!("invalid diagram:\n  {}", lines.join("\n  "))))
            }
        }
        Command::Invariants { file } => {
            let mut out = String::new();
            match io.front(&file)? {
                FrontFile::Legendrian(d) => {
                    let inv = d.classical_invariants()?;
                    for (c, ci) in inv.components.iter().enumerate() {
                        out += &format!("component {c}: tb={} rot={} writhe={}\n", ci.tb, ci.rot, ci.writhe);
                    }
                    for i in 0..inv.components.len() {
                        for j in i + 1..inv.components.len() {
                            out += &format!("lk({i},{j})={}\n", inv.linking[i][j]);
                        }
                    }
                }
                FrontFile::Transverse(t) => {
                    for c in 0..t.num_components()? {
                        out += &format!("component {c}: sl={}\n", t.self_linking(c)?);
                    }
                }
            }
            io.print(&out)?;
            Ok(0)
        }
        Command::Lutz { file, component, sign, out } => {
            let mut pres = match io.front(&file)? {
                FrontFile::Legendrian(d) => lutz_pair(&d, component, sign.into())?,
                FrontFile::Transverse(t) => lutz_on_transverse(&t, component, sign.into())?,
            };
            if file.as_os_str() != "-" {
                pres = pres.with_front_label(&file_name(&file));
            }
            io.write(&out, &(pres.to_json() + "\n"))?;
            Ok(0)
        }
        Command::D3 { file, terms } => {
            let pres = io.presentation(&file)?;
            let t = d3_terms(&pres)?;
            let mut text = format!("{}\n", t.value);
            if terms {
                text += &format!("c^2={} sigma={} chi={} q={}\n", rational(&t.c_squared), t.sigma, t.chi, t.q);
            }
            io.print(&text)?;
            Ok(0)
        }
        Command::C1 { file } => {
            let pres = io.presentation(&file)?;
            io.print(&(chern_class(&pres).to_json() + "\n"))?;
            Ok(0)
        }
        Command::Slide { file, from, over, sign, out } => {
            let pres = io.presentation(&file)?.handle_slide(from, over, sign)?;
            io.write(&out, &(pres.to_json() + "\n"))?;
            Ok(0)
        }
        Command::Cancel { file, knot, meridian, out } => {
            let pres = io.presentation(&file)?.cancel_meridian_pair(knot, meridian)?;
            io.write(&out, &(pres.to_json() + "\n"))?;
            Ok(0)
        }
        Command::VerifyLutz { file, component, sign } => {
            let d = io.legendrian(&file)?;
            verify_lutz(io, &d, component, sign.into())
        }
        Command::S3 { n, out } => {
            let pres = s3_overtwisted(n)?;
            io.write(&out, &(pres.to_json() + "\n"))?;
            Ok(0)
        }
        Command::Render { file, format, lutz, sign, out } => {
            let text = match (io.front(&file)?, lutz) {
                (FrontFile::Legendrian(d), None) => draw(&d, format, &file)?,
                (FrontFile::Transverse(t), None) => match format {
                    Format::Ascii => render::ascii_transverse(&t)?,
                    Format::Svg => render::svg_transverse(&t, &title(&file))?,
                },
                (f, Some(c)) => {
                    let d = match f {
                        FrontFile::Legendrian(d) => d,
                        FrontFile::Transverse(t) => t.to_legendrian()?,
                    };
                    let sign: LutzSign = sign.into();
                    let figure = explicit_lutz_front(&d, c, sign)?;
                    let mut text = draw(&figure, format, &file)?;
                    if let Format::Ascii = format {
                        text += &format!(
                            "component 0: L1, contact +1\ncomponent 1: K\ncomponent 2: L2 = push-off of K with one {} zigzag, contact +1\n",
                            if sign == LutzSign::Positive { "up" } else { "down" }
                        );
                    }
                    text
                }
            };
            io.write(&out, &text)?;
            Ok(0)
        }
    }
}

fn file_name(file: &PathBuf) -> String {
    file.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn title(file: &PathBuf) -> String {
    file_name(file).replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn draw(d: &FrontDiagram, format: Format, file: &PathBuf) -> Result<String, CliError> {
    Ok(match format {
        Format::Ascii => render::ascii_front(d)?,
        Format::Svg => render::svg_front(d, &title(file))?,
    })
}

fn rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn verify_lutz(io: &mut Io, d: &FrontDiagram, component: usize, sign: LutzSign) -> Result<i32, CliError> {
    let inv = d.classical_invariants()?;
    if component >= inv.components.len() {
        return Err(FrontError::InvalidComponent { component, components: inv.components.len() }.into());
    }
    let (t, r) = (inv.tb(component), inv.rot(component));
    let pres = lutz_pair(d, component, sign)?;
    let mut out = format!("knot: tb={t} rot={r}\n");

    let slid = pres.handle_slide(1, 0, -1)?;
    let trivial = match slid.cancel_meridian_pair(0, 1) {
        Ok(rest) => rest.is_empty(),
        Err(_) => false,
    };
    out += &format!(
        "triviality: {} (L2 - L1 has framing {} and links L1 {} times; cancelling leaves nothing)\n",
        io.status(trivial),
        slid.linking_matrix().get(1, 1),
        slid.linking_matrix().get(0, 1)
    );

    let ot = overtwisted_framing_check(&pres, 1)?;
    out += &format!(
        "overtwisted disc: {} (lk(K,L1)={} lk(K,L2)={} disc framing={} contact framing={})\n",
        io.status(ot.holds),
        ot.lk_k_l1,
        ot.lk_k_l2,
        ot.disc_framing,
        ot.contact_framing
    );

    let after = d3(&pres)?;
    let change = relative_d3(&d3_standard(), &after);
    let expected = expected_d3_change(t, r, sign);
    let d3_ok = change == Rational::from_integer(expected.into());
    out += &format!(
        "d3 change: {} (d3 = {after}, change {} = {})\n",
        io.status(d3_ok),
        rational(&change),
        if sign == LutzSign::Positive { format!("r - t = {expected}") } else { format!("-(t + r) = {expected}") }
    );
    io.print(&out)?;
    Ok(if trivial && ot.holds && d3_ok { 0 } else { 2 })
}
