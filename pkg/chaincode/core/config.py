from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    app_name: str = "chaincode"
    debug: bool = False

    # Enumeration budget shared by every search; CHAINCODE_MAX_ENUM overrides it.
    max_enum: int = 2**26
    threads: int = 1
    search_chunk: int = 2**15
    # Dense ring tables are only built for rings up to this size.
    table_limit: int = 2048
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(env_prefix="CHAINCODE_", env_file=".env")


settings = Settings()
